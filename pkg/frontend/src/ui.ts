/** DOM view: builds the widgets once and re-renders them from each
 * state snapshot. Rendering is a pure function of the snapshot; nothing
 * here computes a verdict, it only displays what the server said.
 */

import { Client, Pair, Vector } from "./api.js";
import { Controller, Snapshot, parseVectors } from "./state.js";

const SVG_NS = "http://www.w3.org/2000/svg";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  text = "",
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, value);
  }
  if (text !== "") {
    node.textContent = text;
  }
  return node;
}

function formatVector(v: Vector): string {
  return `(${v.join(", ")})`;
}

function formatPair(p: Pair): string {
  const chosen = p.chosen.map(formatVector).join(" ");
  const rejected = p.rejected.map(formatVector).join(" ");
  return `chose ${chosen} over ${rejected || "nothing"}`;
}

export function mountApp(root: HTMLElement, client: Client): Controller {
  root.innerHTML = "";

  const setup = el("section", { id: "setup" });
  const dimensionInput = el("input", { id: "dimension", type: "number", value: "2", min: "1" });
  const startButton = el("button", { id: "start" }, "Start session");
  setup.append(el("h2", {}, "Session"), dimensionInput, startButton);

  const badge = el("span", { id: "badge", class: "badge unknown" }, "no session");

  const editor = el("section", { id: "editor" });
  const chosenInput = el("textarea", { id: "pair-chosen", rows: "3" });
  const rejectedInput = el("textarea", { id: "pair-rejected", rows: "3" });
  const addButton = el("button", { id: "add-pair" }, "Add pair");
  const undoButton = el("button", { id: "undo" }, "Undo last pair");
  const pairError = el("div", { id: "pair-error", class: "error" });
  const pairList = el("ol", { id: "pair-list" });
  editor.append(
    el("h2", {}, "Assessment"),
    el("label", { for: "pair-chosen" }, "Chosen options, one per line"),
    chosenInput,
    el("label", { for: "pair-rejected" }, "Rejected options, one per line"),
    rejectedInput,
    addButton,
    undoButton,
    pairError,
    pairList,
  );

  const chooser = el("section", { id: "chooser" });
  const optionsInput = el("textarea", { id: "query-options", rows: "3" });
  const queryButton = el("button", { id: "run-query" }, "Choose");
  const queryError = el("div", { id: "query-error", class: "error" });
  const resultList = el("ul", { id: "result-list" });
  const resultNote = el("div", { id: "result-note" });
  chooser.append(
    el("h2", {}, "What-if query"),
    el("label", { for: "query-options" }, "Options, one per line"),
    optionsInput,
    queryButton,
    queryError,
    resultList,
    resultNote,
  );

  const statsPanel = el("section", { id: "stats" });
  statsPanel.append(el("h2", {}, "Generator sizes"), el("dl", { id: "stats-list" }));

  const plot = document.createElementNS(SVG_NS, "svg");
  plot.setAttribute("id", "plot");
  plot.setAttribute("viewBox", "0 0 300 300");
  plot.setAttribute("width", "300");
  plot.setAttribute("height", "300");

  const serverError = el("div", { id: "server-error", class: "error" });

  root.append(setup, badge, serverError, editor, chooser, statsPanel, plot);

  const controller = new Controller(client, render);

  startButton.addEventListener("click", () => {
    const dimension = Number(dimensionInput.value);
    if (!Number.isInteger(dimension) || dimension < 1) {
      serverError.textContent = "dimension must be a positive integer";
      return;
    }
    void controller.start(dimension);
  });

  addButton.addEventListener("click", () => {
    pairError.textContent = "";
    const dimension = controller.current().dimension;
    let pair: Pair;
    try {
      pair = {
        chosen: parseVectors(chosenInput.value, dimension),
        rejected: parseVectors(rejectedInput.value, dimension),
      };
      if (pair.chosen.length === 0) {
        throw new Error("at least one chosen option is required");
      }
    } catch (err) {
      pairError.textContent = err instanceof Error ? err.message : String(err);
      return;
    }
    void controller.addPair(pair).then(() => {
      if (controller.current().error === null) {
        chosenInput.value = "";
        rejectedInput.value = "";
      }
    });
  });

  undoButton.addEventListener("click", () => {
    void controller.undo();
  });

  queryButton.addEventListener("click", () => {
    queryError.textContent = "";
    const dimension = controller.current().dimension;
    let options: Vector[];
    try {
      options = parseVectors(optionsInput.value, dimension);
      if (options.length === 0) {
        throw new Error("enter at least one option");
      }
    } catch (err) {
      queryError.textContent = err instanceof Error ? err.message : String(err);
      return;
    }
    void controller.choose(options);
  });

  pairList.addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    const raw = target.dataset["index"];
    if (raw !== undefined) {
      void controller.removePair(Number(raw));
    }
  });

  function renderBadge(s: Snapshot): void {
    if (s.sessionId === null) {
      badge.className = "badge unknown";
      badge.textContent = "no session";
    } else if (s.consistent === null) {
      badge.className = "badge unknown";
      badge.textContent = "checking";
    } else if (s.consistent) {
      badge.className = "badge consistent";
      badge.textContent = "consistent";
    } else {
      badge.className = "badge inconsistent";
      badge.textContent = "inconsistent";
    }
  }

  function renderPairs(s: Snapshot): void {
    pairList.innerHTML = "";
    s.pairs.forEach((pair, index) => {
      const item = el("li", {}, formatPair(pair) + " ");
      const remove = el("button", { "data-index": String(index) }, "remove");
      item.append(remove);
      pairList.append(item);
    });
    undoButton.toggleAttribute("disabled", s.busy || s.pairs.length === 0);
  }

  function renderResult(s: Snapshot): void {
    resultList.innerHTML = "";
    resultNote.textContent = "";
    const result = s.lastResult;
    if (result === null) {
      return;
    }
    for (const v of result.chosen) {
      resultList.append(el("li", { class: "chosen" }, formatVector(v)));
    }
    for (const v of result.rejected) {
      resultList.append(el("li", { class: "rejected" }, formatVector(v)));
    }
    if (!result.consistent) {
      resultNote.textContent = "assessment inconsistent: every option is rejected";
    } else if (result.chosen.length === 1) {
      resultNote.textContent = "decisive: a unique choice";
    } else {
      resultNote.textContent =
        "insufficient information to decide between the remaining options";
    }
  }

  function renderStats(s: Snapshot): void {
    const list = statsPanel.querySelector("#stats-list") as HTMLElement;
    list.innerHTML = "";
    if (s.statsTimedOut) {
      list.append(el("dd", { class: "timeout" }, "statistics timed out on the server"));
      return;
    }
    if (s.stats === null) {
      return;
    }
    const entries: [string, string][] = [
      ["conjunctive sets (raw)", String(s.stats.h_naive)],
      ["conjunctive sets (simplified)", String(s.stats.h_simplified)],
      ["disjunctive sets (raw)", s.stats.g_naive_size],
      ["disjunctive sets (simplified)", String(s.stats.g_full_size)],
    ];
    for (const [label, value] of entries) {
      list.append(el("dt", {}, label), el("dd", {}, value));
    }
  }

  function renderPlot(s: Snapshot): void {
    plot.innerHTML = "";
    if (s.dimension !== 2 || s.lastResult === null) {
      plot.style.display = "none";
      return;
    }
    plot.style.display = "";
    const points: { v: Vector; chosen: boolean }[] = [
      ...s.lastResult.chosen.map((v) => ({ v, chosen: true })),
      ...s.lastResult.rejected.map((v) => ({ v, chosen: false })),
    ];
    const xs = points.map((p) => p.v[0] ?? 0);
    const ys = points.map((p) => p.v[1] ?? 0);
    const lo = Math.min(...xs, ...ys, 0);
    const hi = Math.max(...xs, ...ys, 1);
    const scale = (x: number) => 20 + ((x - lo) / (hi - lo || 1)) * 260;
    for (const { v, chosen } of points) {
      const circle = document.createElementNS(SVG_NS, "circle");
      circle.setAttribute("cx", String(scale(v[0] ?? 0)));
      circle.setAttribute("cy", String(300 - scale(v[1] ?? 0)));
      circle.setAttribute("r", "5");
      circle.setAttribute("class", chosen ? "chosen" : "rejected");
      circle.setAttribute("fill", chosen ? "#2a7d2a" : "#b03030");
      plot.append(circle);
    }
  }

  function render(s: Snapshot): void {
    renderBadge(s);
    renderPairs(s);
    renderResult(s);
    renderStats(s);
    renderPlot(s);
    serverError.textContent = s.error ?? "";
    for (const button of [startButton, addButton, queryButton]) {
      button.toggleAttribute("disabled", s.busy);
    }
    const hasSession = s.sessionId !== null;
    editor.style.display = hasSession ? "" : "none";
    chooser.style.display = hasSession ? "" : "none";
    statsPanel.style.display = hasSession ? "" : "none";
  }

  render(controller.current());
  return controller;
}
