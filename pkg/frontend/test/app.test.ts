// @vitest-environment happy-dom
import { beforeEach, describe, expect, it, vi } from "vitest";

import { ApiClient } from "../src/api.js";
import { AbacusApp } from "../src/app.js";

function mountApp(fetchFn: typeof fetch) {
  const root = document.createElement("div");
  document.body.appendChild(root);
  const app = new AbacusApp(root, new ApiClient("http://api", fetchFn), { rodCount: 2 });
  return { root, app };
}

function clickBead(root: HTMLElement, rod: number, part: string, index: number) {
  const bead = root.querySelector<HTMLElement>(
    `[data-bead][data-rod="${rod}"][data-part="${part}"][data-index="${index}"]`,
  );
  expect(bead, `bead ${rod}/${part}/${index}`).toBeTruthy();
  bead!.click();
}

function pressIcon(root: HTMLElement, action: string) {
  root.querySelector<HTMLElement>(`[data-action="${action}"]`)!.click();
}

const neverCalled = vi.fn(async () => {
  throw new Error("no network expected");
});

beforeEach(() => {
  document.body.innerHTML = "";
  neverCalled.mockClear();
});

describe("digit display", () => {
  it("never shows digits while see-number is off", () => {
    const { root } = mountApp(neverCalled);
    clickBead(root, 0, "lower", 3);
    expect(root.querySelector("[data-display]")!.textContent).toBe("");
    pressIcon(root, "see-number");
    expect(root.querySelector("[data-display]")!.textContent).toBe("3");
    pressIcon(root, "see-number");
    expect(root.querySelector("[data-display]")!.textContent).toBe("");
  });
});

describe("bead clicks", () => {
  it("applies the toggle-run rule and buffers gestures", () => {
    const { root, app } = mountApp(neverCalled);
    clickBead(root, 0, "lower", 3);
    expect(app.state.config.rods[0]).toEqual({ lower: 3, upper: 0 });
    clickBead(root, 0, "lower", 2);
    expect(app.state.config.rods[0]).toEqual({ lower: 1, upper: 0 });
    clickBead(root, 0, "upper", 1);
    expect(app.state.config.rods[0]).toEqual({ lower: 1, upper: 1 });
    expect(app.state.pending.map((g) => g.type)).toEqual([
      "click_lower",
      "click_lower",
      "click_upper",
    ]);
  });

  it("set-to-zero clears every rod and records the icon", () => {
    const { root, app } = mountApp(neverCalled);
    clickBead(root, 0, "lower", 4);
    clickBead(root, 1, "upper", 2);
    pressIcon(root, "set-zero");
    expect(app.state.config.rods).toEqual([
      { lower: 0, upper: 0 },
      { lower: 0, upper: 0 },
    ]);
    expect(app.state.pending.at(-1)).toMatchObject({ type: "icon_set_zero" });
  });
});

describe("positioning", () => {
  it("adopts the server's normalized configuration", async () => {
    const fetchFn = vi.fn(async () =>
      new Response(JSON.stringify({ rods: [{ lower: 0, upper: 1 }, { lower: 2, upper: 0 }] }), { status: 200 }),
    );
    const { root, app } = mountApp(fetchFn);
    // hand-build inscription B of 25
    clickBead(root, 1, "lower", 2);
    clickBead(root, 0, "lower", 5);
    await app.iconPositioning();
    expect(app.state.config.rods).toEqual([
      { lower: 0, upper: 1 },
      { lower: 2, upper: 0 },
    ]);
    expect(app.state.pending.at(-1)).toMatchObject({ type: "icon_positioning" });
  });

  it("surfaces overflow as a banner and drops the icon press", async () => {
    const fetchFn = vi.fn(async () =>
      new Response(JSON.stringify({ error: "overflow", message: "15 does not fit" }), { status: 400 }),
    );
    const { root, app } = mountApp(fetchFn);
    clickBead(root, 0, "lower", 5);
    const pendingBefore = app.state.pending.length;
    await app.iconPositioning();
    expect(app.state.banner).toContain("does not fit");
    expect(app.state.pending.length).toBe(pendingBefore);
    expect(root.querySelector("[data-banner]")).toBeTruthy();
  });
});

describe("submit", () => {
  it("keeps the trace buffered and reuses the attempt id after a network failure", async () => {
    let calls = 0;
    const fetchFn = vi.fn(async (url: string, init?: RequestInit) => {
      calls += 1;
      if (calls === 1) throw new TypeError("fetch failed"); // first session create
      if (url.endsWith("/sessions")) {
        return new Response(JSON.stringify({ id: "s77" }), { status: 200 });
      }
      return new Response(
        JSON.stringify({
          correct: true,
          report: { technique_id: "RA_T1", tags: ["calculating"], decomposition: [5, 3], formula: "8=5+3", correct: true, notes: [] },
        }),
        { status: 200 },
      );
    });
    const { root, app } = mountApp(fetchFn as unknown as typeof fetch);
    app.startTask({ kind: "set_number", register: "virtual_abacus", rod_count: 1, target: 8 });
    clickBead(root, 0, "upper", 1);
    clickBead(root, 0, "lower", 3);

    await app.submit(); // network down
    expect(app.state.banner).toContain("retry");
    expect(app.state.pending.length).toBe(2);
    expect(app.state.feedback).toBeNull();

    await app.submit(); // retried: same gestures, now delivered
    expect(app.state.feedback?.correct).toBe(true);
    const submitted = fetchFn.mock.calls
      .map(([, init]) => init)
      .filter((init): init is RequestInit => Boolean(init?.body))
      .map((init) => JSON.parse(init.body as string))
      .filter((body) => body.trace);
    expect(submitted.length).toBe(1);
    expect(submitted[0]!.trace.gestures).toHaveLength(2);
    expect(root.querySelector("[data-feedback]")!.textContent).toContain("8 = 5 + 3");
  });
});
