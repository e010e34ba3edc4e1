// Client-side mirror of the abacus semantics, for instant feedback.
// The server replays every submitted trace itself; this must agree with it
// (pinned by fixture vectors generated from the engine).

import type { ConfigJson, RodJson } from "./types.js";

export const LOWER_BEADS = 5;
export const UPPER_BEADS = 2;

export function zeros(rodCount: number): ConfigJson {
  const rods: RodJson[] = [];
  for (let i = 0; i < rodCount; i++) rods.push({ lower: 0, upper: 0 });
  return { rods };
}

export function readValue(config: ConfigJson): number {
  let total = 0;
  config.rods.forEach((rod, k) => {
    total += (rod.lower + 5 * rod.upper) * 10 ** k;
  });
  return total;
}

// Toggle-run click rule: an inactive bead pulls in everything up to itself,
// an active bead pushes out itself and everything beyond it.
export function clickResult(active: number, index: number): number {
  return index > active ? index : index - 1;
}

export function applyClick(
  config: ConfigJson,
  rod: number,
  part: "lower" | "upper",
  index: number,
): ConfigJson {
  const rods = config.rods.map((r, i) => {
    if (i !== rod) return { ...r };
    if (part === "lower") return { ...r, lower: clickResult(r.lower, index) };
    return { ...r, upper: clickResult(r.upper, index) };
  });
  return { rods };
}

export function configsEqual(a: ConfigJson, b: ConfigJson): boolean {
  return (
    a.rods.length === b.rods.length &&
    a.rods.every((rod, i) => rod.lower === b.rods[i]!.lower && rod.upper === b.rods[i]!.upper)
  );
}

// "8=5+3" reads better for students as "8 = 5 + 3".
export function friendlyFormula(formula: string): string {
  return formula.replace(/([=+×])/g, " $1 ").replace(/(\d)-(\d)/g, "$1 - $2").replace(/\s+/g, " ").trim();
}

const TAG_WORDS: Record<string, string> = {
  counting: "counting one by one",
  ordinality: "picking the right bead directly",
  calculating: "using an addition fact",
  quantity_value: "knowing the upper bead counts five",
  exchange: "trading five ones for a five",
  trial_error: "trying and checking",
};

export function friendlyTags(tags: string[]): string[] {
  return tags.map((tag) => TAG_WORDS[tag] ?? tag);
}
