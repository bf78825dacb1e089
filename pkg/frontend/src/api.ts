/** Typed fetch client for the session service REST API.
 *
 * Every method maps one-to-one onto an endpoint and returns the server
 * body verbatim; no interpretation happens here.
 */

export type Vector = number[];

export interface Pair {
  chosen: Vector[];
  rejected: Vector[];
}

export interface SessionCreated {
  id: string;
  dimension: number;
}

export interface SessionView {
  id: string;
  dimension: number;
  pairs: Pair[];
}

export interface ConsistencyView {
  consistent: boolean;
}

export interface ChooseView {
  chosen: Vector[];
  rejected: Vector[];
  consistent: boolean;
}

export interface StatsView {
  h_naive: number;
  h_simplified: number;
  g_naive_size: string;
  g_full_size: number;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

type FetchLike = typeof fetch;

export class Client {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: {} };
    if (body !== undefined) {
      init.headers = { "Content-Type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const resp = await this.fetchImpl(this.baseUrl + path, init);
    if (resp.status === 204) {
      return undefined as T;
    }
    const doc = await resp.json();
    if (!resp.ok) {
      const message =
        typeof doc === "object" && doc !== null && "error" in doc
          ? String((doc as { error: unknown }).error)
          : `request failed with status ${resp.status}`;
      throw new ApiError(resp.status, message);
    }
    return doc as T;
  }

  createSession(dimension: number): Promise<SessionCreated> {
    return this.request("POST", "/api/sessions", { dimension });
  }

  getSession(id: string): Promise<SessionView> {
    return this.request("GET", `/api/sessions/${id}`);
  }

  deleteSession(id: string): Promise<void> {
    return this.request("DELETE", `/api/sessions/${id}`);
  }

  addPair(id: string, pair: Pair): Promise<SessionView> {
    return this.request("POST", `/api/sessions/${id}/pairs`, pair);
  }

  removePair(id: string, index: number): Promise<SessionView> {
    return this.request("DELETE", `/api/sessions/${id}/pairs/${index}`);
  }

  consistency(id: string): Promise<ConsistencyView> {
    return this.request("GET", `/api/sessions/${id}/consistency`);
  }

  choose(id: string, options: Vector[]): Promise<ChooseView> {
    return this.request("POST", `/api/sessions/${id}/choose`, { options });
  }

  stats(id: string): Promise<StatsView> {
    return this.request("GET", `/api/sessions/${id}/stats`);
  }
}
