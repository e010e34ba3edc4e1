// Wire types shared with the suanpan HTTP API.

export interface RodJson {
  lower: number;
  upper: number;
}

export interface ConfigJson {
  rods: RodJson[];
}

export type GestureJson =
  | { type: "click_lower"; rod: number; index: number; t?: number }
  | { type: "click_upper"; rod: number; index: number; t?: number }
  | { type: "exchange_five"; rod: number; t?: number }
  | { type: "icon_set_zero"; t?: number }
  | { type: "icon_positioning"; t?: number }
  | { type: "icon_see_number"; on: boolean; t?: number };

export interface TraceJson {
  register: "virtual_abacus";
  gestures: GestureJson[];
  target?: number;
  see_number_initially_on?: boolean;
}

export type TaskKind = "set_number" | "read_number" | "set_and_say";
export type LanguageCode = "english" | "french" | "maori" | "breton";

export interface TaskJson {
  kind: TaskKind;
  register: "virtual_abacus";
  rod_count: number;
  target?: number;
  config?: ConfigJson;
  language?: LanguageCode;
}

export interface ReportJson {
  technique_id: string;
  tags: string[];
  decomposition: (number | number[])[];
  formula: string;
  correct: boolean;
  notes: string[];
}

export interface AttemptVerdict {
  correct: boolean;
  report: ReportJson;
}

export interface NumeralFormJson {
  value: number;
  language: LanguageCode;
  words: string;
  terms: unknown[];
  formula: string;
}

export interface ApiErrorBody {
  error: string;
  message: string;
}
