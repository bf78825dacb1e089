/** Session controller: owns the mirrored server state and funnels every
 * user action through the REST API.
 *
 * All displayed facts (pair list, consistency, choice verdicts, sizes)
 * come verbatim from server responses. After every mutation the
 * controller refreshes with exactly one consistency fetch and one stats
 * fetch, so the view never drifts from server truth. While a request is
 * in flight the state is marked busy and the UI disables its inputs.
 */

import {
  ApiError,
  ChooseView,
  Client,
  ConsistencyView,
  Pair,
  StatsView,
  Vector,
} from "./api.js";

export interface Snapshot {
  sessionId: string | null;
  dimension: number;
  pairs: Pair[];
  consistent: boolean | null;
  stats: StatsView | null;
  statsTimedOut: boolean;
  lastQuery: Vector[] | null;
  lastResult: ChooseView | null;
  busy: boolean;
  error: string | null;
}

export type Listener = (snapshot: Snapshot) => void;

function initialSnapshot(): Snapshot {
  return {
    sessionId: null,
    dimension: 0,
    pairs: [],
    consistent: null,
    stats: null,
    statsTimedOut: false,
    lastQuery: null,
    lastResult: null,
    busy: false,
    error: null,
  };
}

export class Controller {
  private snapshot: Snapshot = initialSnapshot();

  constructor(
    private readonly client: Client,
    private readonly listener: Listener,
  ) {}

  current(): Snapshot {
    return this.snapshot;
  }

  private emit(patch: Partial<Snapshot>): void {
    this.snapshot = { ...this.snapshot, ...patch };
    this.listener(this.snapshot);
  }

  private async run(action: () => Promise<void>): Promise<void> {
    if (this.snapshot.busy) {
      return;
    }
    this.emit({ busy: true, error: null });
    try {
      await action();
    } catch (err) {
      this.emit({ error: err instanceof Error ? err.message : String(err) });
    } finally {
      this.emit({ busy: false });
    }
  }

  /** One consistency fetch plus one stats fetch; called after every
   * mutation. A stats timeout (503) is shown as such, not as staleness. */
  private async refresh(): Promise<void> {
    const id = this.snapshot.sessionId;
    if (id === null) {
      return;
    }
    const view: ConsistencyView = await this.client.consistency(id);
    this.emit({ consistent: view.consistent });
    try {
      const stats = await this.client.stats(id);
      this.emit({ stats, statsTimedOut: false });
    } catch (err) {
      if (err instanceof ApiError && err.status === 503) {
        this.emit({ stats: null, statsTimedOut: true });
        return;
      }
      throw err;
    }
  }

  start(dimension: number): Promise<void> {
    return this.run(async () => {
      const created = await this.client.createSession(dimension);
      this.emit({
        ...initialSnapshot(),
        busy: true,
        sessionId: created.id,
        dimension: created.dimension,
      });
      await this.refresh();
    });
  }

  addPair(pair: Pair): Promise<void> {
    return this.run(async () => {
      const id = this.requireSession();
      const view = await this.client.addPair(id, pair);
      this.emit({ pairs: view.pairs });
      await this.refresh();
    });
  }

  removePair(index: number): Promise<void> {
    return this.run(async () => {
      const id = this.requireSession();
      const view = await this.client.removePair(id, index);
      this.emit({ pairs: view.pairs });
      await this.refresh();
    });
  }

  /** Drop the most recently added pair; the escape hatch after an
   * addition flips the badge to inconsistent. */
  undo(): Promise<void> {
    const last = this.snapshot.pairs.length - 1;
    if (last < 0) {
      return Promise.resolve();
    }
    return this.removePair(last);
  }

  choose(options: Vector[]): Promise<void> {
    return this.run(async () => {
      const id = this.requireSession();
      const result = await this.client.choose(id, options);
      this.emit({ lastQuery: options, lastResult: result });
    });
  }

  private requireSession(): string {
    const id = this.snapshot.sessionId;
    if (id === null) {
      throw new Error("no active session");
    }
    return id;
  }
}

/** Parse one vector per line, entries separated by commas or spaces.
 * Purely syntactic; all semantic checks stay on the server. */
export function parseVectors(text: string, dimension: number): Vector[] {
  const vectors: Vector[] = [];
  for (const rawLine of text.split("\n")) {
    const line = rawLine.trim();
    if (line === "") {
      continue;
    }
    const parts = line.split(/[,\s]+/).filter((p) => p !== "");
    const vector = parts.map((p) => Number(p));
    if (vector.some((x) => !Number.isFinite(x))) {
      throw new Error(`not a numeric vector: "${line}"`);
    }
    if (vector.length !== dimension) {
      throw new Error(
        `"${line}" has ${vector.length} entries, the session dimension is ${dimension}`,
      );
    }
    vectors.push(vector);
  }
  return vectors;
}
