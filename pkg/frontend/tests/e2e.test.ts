/** End-to-end: drives the real DOM against a live service instance.
 * The document origin must match the service for fetch to be allowed.
 *
 * @vitest-environment happy-dom
 * @vitest-environment-options {"url": "http://127.0.0.1:8973"}
 */

import { spawn, ChildProcess } from "node:child_process";

import { afterAll, beforeAll, expect, test, vi } from "vitest";

import { Client } from "../src/api.js";
import { mountApp } from "../src/ui.js";

const PORT = 8973;
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess | undefined;

async function serverUp(): Promise<boolean> {
  try {
    return (await fetch(`${BASE}/openapi.json`)).ok;
  } catch {
    return false;
  }
}

async function waitForServer(): Promise<void> {
  for (let i = 0; i < 100; i++) {
    if (await serverUp()) {
      return;
    }
    await new Promise((resolve) => setTimeout(resolve, 300));
  }
  throw new Error("service did not come up");
}

beforeAll(async () => {
  // A previous run's server may still own the port; reuse it if so.
  if (await serverUp()) {
    return;
  }
  server = spawn(
    "python3",
    ["-m", "uvicorn", "choix.service:app", "--port", String(PORT), "--log-level", "warning"],
    { stdio: "ignore" },
  );
  await waitForServer();
});

afterAll(() => {
  server?.kill();
});

function click(id: string): void {
  (document.getElementById(id) as HTMLButtonElement).click();
}

function setValue(id: string, value: string): void {
  (document.getElementById(id) as HTMLTextAreaElement).value = value;
}

function text(id: string): string {
  return document.getElementById(id)?.textContent ?? "";
}

async function settled(): Promise<void> {
  await vi.waitFor(() =>
    expect(
      (document.getElementById("add-pair") as HTMLButtonElement).disabled,
    ).toBe(false),
  );
}

test("scripted elicitation session end-to-end", async () => {
  document.body.innerHTML = '<div id="app"></div>';
  mountApp(document.getElementById("app") as HTMLElement, new Client(BASE));

  click("start");
  await vi.waitFor(() => expect(text("badge")).toBe("consistent"));

  setValue("pair-chosen", "5 -3\n3 -2");
  setValue("pair-rejected", "1 -1\n-2 1");
  click("add-pair");
  await settled();
  setValue("pair-chosen", "-4 8");
  setValue("pair-rejected", "3 1");
  click("add-pair");
  await settled();
  expect(text("badge")).toBe("consistent");
  expect(document.querySelectorAll("#pair-list li").length).toBe(2);

  // The informative query has a unique answer.
  setValue("query-options", "-3 4\n0 1\n4 -3");
  click("run-query");
  await vi.waitFor(() => expect(text("result-note")).toMatch(/decisive/));
  const chosen = document.querySelectorAll("#result-list .chosen");
  expect(chosen.length).toBe(1);
  expect(chosen[0]?.textContent).toBe("(-3, 4)");

  // The uninformative query keeps both options.
  setValue("query-options", "-2 2\n5 -4");
  click("run-query");
  await vi.waitFor(() =>
    expect(text("result-note")).toMatch(/insufficient information/),
  );
  expect(document.querySelectorAll("#result-list .chosen").length).toBe(2);

  // The session is two-dimensional, so the query is also plotted.
  expect(document.querySelectorAll("#plot circle").length).toBe(2);

  // Generator statistics come straight from the server.
  const sizes = [...document.querySelectorAll("#stats-list dd")].map(
    (n) => n.textContent,
  );
  expect(sizes).toEqual(["3", "3", "4", "1"]);

  // A contradictory pair flips the badge; undo restores it.
  setValue("pair-chosen", "0 0");
  setValue("pair-rejected", "1 1");
  click("add-pair");
  await settled();
  await vi.waitFor(() => expect(text("badge")).toBe("inconsistent"));

  click("undo");
  await vi.waitFor(() => expect(text("badge")).toBe("consistent"));
  expect(document.querySelectorAll("#pair-list li").length).toBe(2);
}, 60000);
