// Typed client for the suanpan session API.

import type {
  ApiErrorBody,
  AttemptVerdict,
  ConfigJson,
  NumeralFormJson,
  ReportJson,
  TaskJson,
  TraceJson,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    readonly base: string,
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await this.fetchFn(this.base + path, {
      method,
      headers: body === undefined ? undefined : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!response.ok) {
      let parsed: ApiErrorBody | null = null;
      try {
        parsed = (await response.json()) as ApiErrorBody;
      } catch {
        // non-JSON error body
      }
      throw new ApiError(response.status, parsed?.error ?? "http-error", parsed?.message ?? response.statusText);
    }
    return (await response.json()) as T;
  }

  createSession(participant = "anonymous"): Promise<{ id: string }> {
    return this.request("POST", "/sessions", { participant });
  }

  submitAttempt(
    sessionId: string,
    task: TaskJson,
    trace: TraceJson,
    answer?: string,
    attemptId?: string,
  ): Promise<AttemptVerdict> {
    return this.request("POST", `/sessions/${sessionId}/attempts`, {
      task,
      trace,
      ...(answer !== undefined ? { answer } : {}),
      ...(attemptId !== undefined ? { attempt_id: attemptId } : {}),
    });
  }

  normalize(config: ConfigJson): Promise<ConfigJson> {
    return this.request("POST", "/abacus/normalize", { config });
  }

  economical(n: number, rods: number): Promise<ConfigJson> {
    return this.request("GET", `/abacus/economical?n=${n}&rods=${rods}`);
  }

  verbalize(n: number, lang: string): Promise<NumeralFormJson> {
    return this.request("GET", `/verbalize?n=${n}&lang=${lang}`);
  }

  classify(trace: TraceJson, target: number): Promise<ReportJson> {
    return this.request("POST", "/classify", { trace, target });
  }
}
