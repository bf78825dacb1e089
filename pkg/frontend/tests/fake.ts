/** In-memory stand-in for the session service, used by the unit tests.
 * It records every request so tests can assert the exact traffic, and
 * serves canned consistency/stats/choose responses so pass-through can
 * be checked without any real inference.
 */

import { ChooseView, Pair, StatsView } from "../src/api.js";

export class FakeService {
  calls: string[] = [];
  pairs: Pair[] = [];
  dimension = 2;
  consistencyResponse = { consistent: true };
  statsStatus = 200;
  statsResponse: StatsView = {
    h_naive: 0,
    h_simplified: 0,
    g_naive_size: "1",
    g_full_size: 1,
  };
  chooseResponse: ChooseView = { chosen: [], rejected: [], consistent: true };

  fetch = async (input: RequestInfo | URL, init?: RequestInit): Promise<Response> => {
    const url = String(input);
    const path = url.replace(/^https?:\/\/[^/]+/, "");
    const method = init?.method ?? "GET";
    this.calls.push(`${method} ${path}`);
    const body = init?.body ? JSON.parse(String(init.body)) : undefined;

    const json = (doc: unknown, status = 200) =>
      new Response(JSON.stringify(doc), {
        status,
        headers: { "Content-Type": "application/json" },
      });

    if (method === "POST" && path === "/api/sessions") {
      this.dimension = body.dimension;
      this.pairs = [];
      return json({ id: "s1", dimension: body.dimension }, 201);
    }
    const session = () => ({ id: "s1", dimension: this.dimension, pairs: this.pairs });
    if (method === "POST" && path === "/api/sessions/s1/pairs") {
      if (body.chosen.length === 0) {
        return json({ error: "the chosen part must be non-empty" }, 400);
      }
      this.pairs = [...this.pairs, body];
      return json(session());
    }
    const removed = path.match(/^\/api\/sessions\/s1\/pairs\/(\d+)$/);
    if (method === "DELETE" && removed) {
      const index = Number(removed[1]);
      if (index >= this.pairs.length) {
        return json({ error: `no pair ${index}` }, 404);
      }
      this.pairs = this.pairs.filter((_p, i) => i !== index);
      return json(session());
    }
    if (method === "GET" && path === "/api/sessions/s1/consistency") {
      return json(this.consistencyResponse);
    }
    if (method === "GET" && path === "/api/sessions/s1/stats") {
      if (this.statsStatus !== 200) {
        return json({ error: "generator rebuild timed out" }, this.statsStatus);
      }
      return json(this.statsResponse);
    }
    if (method === "POST" && path === "/api/sessions/s1/choose") {
      return json(this.chooseResponse);
    }
    if (method === "GET" && path === "/api/sessions/s1") {
      return json(session());
    }
    return json({ error: `unhandled ${method} ${path}` }, 404);
  };

  mutationCount(): number {
    return this.calls.filter(
      (c) => c.startsWith("POST /api/sessions/s1/pairs") || c.startsWith("DELETE "),
    ).length;
  }
}
