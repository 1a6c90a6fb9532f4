/** Pure form-state logic: weight clamping, the live sum, submittability. */

export interface FormState {
  domain: string;
  func: string;
  hostAgents: boolean;
  /** null means the input is blank; a blank weight counts as 0. */
  weights: Record<string, number | null>;
}

export function emptyForm(criteriaNames: string[]): FormState {
  const weights: Record<string, number | null> = {};
  for (const name of criteriaNames) weights[name] = null;
  return { domain: "", func: "", hostAgents: false, weights };
}

export function weightSum(state: FormState): number {
  return Object.values(state.weights).reduce<number>((total, w) => total + (w ?? 0), 0);
}

export function isSubmittable(state: FormState): boolean {
  return weightSum(state) === 100 && state.domain !== "" && state.func !== "";
}

export interface ClampResult {
  value: number | null;
  message: string | null;
}

/** Parse one weight input; out-of-range entries clamp into [0, 100]. */
export function clampWeight(raw: string): ClampResult {
  if (raw.trim() === "") {
    return { value: null, message: null };
  }
  const parsed = Number(raw);
  if (!Number.isFinite(parsed)) {
    return { value: null, message: "enter a whole number" };
  }
  const rounded = Math.round(parsed);
  if (rounded < 0) return { value: 0, message: "clamped to 0" };
  if (rounded > 100) return { value: 100, message: "clamped to 100" };
  if (rounded !== parsed) return { value: rounded, message: `rounded to ${rounded}` };
  return { value: rounded, message: null };
}

export function toReportRequest(state: FormState) {
  const criteria: Record<string, number> = {};
  for (const [name, weight] of Object.entries(state.weights)) {
    criteria[name] = weight ?? 0;
  }
  return {
    context: { domain: state.domain, function: state.func, requireHostAgents: state.hostAgents },
    criteria,
  };
}
