/**
 * Patient dashboard view models. Numbers are rendered from the raw lexemes
 * of the server's JSON response text, never re-serialized, so what the
 * therapist reads is byte-for-byte what the server sent (JS would e.g.
 * print 1000.0 as "1000").
 */

export interface RawJson {
  value: unknown;
  numbers: Map<string, string>; // path like "sessions[2].metrics.duration_s"
}

export function parseWithRawNumbers(text: string): RawJson {
  const numbers = new Map<string, string>();
  let pos = 0;

  function error(msg: string): never {
    throw new Error(`JSON parse error at ${pos}: ${msg}`);
  }

  function skipWs(): void {
    while (pos < text.length && " \t\n\r".includes(text[pos])) pos++;
  }

  function parseString(): string {
    // pos is at the opening quote
    pos++;
    let out = "";
    while (pos < text.length) {
      const ch = text[pos];
      if (ch === '"') {
        pos++;
        return out;
      }
      if (ch === "\\") {
        const esc = text[pos + 1];
        pos += 2;
        if (esc === "u") {
          out += String.fromCharCode(parseInt(text.slice(pos, pos + 4), 16));
          pos += 4;
        } else {
          const map: Record<string, string> = {
            '"': '"', "\\": "\\", "/": "/", b: "\b", f: "\f", n: "\n", r: "\r", t: "\t",
          };
          out += map[esc] ?? esc;
        }
      } else {
        out += ch;
        pos++;
      }
    }
    error("unterminated string");
  }

  function parseValue(path: string): unknown {
    skipWs();
    const ch = text[pos];
    if (ch === "{") {
      pos++;
      const obj: Record<string, unknown> = {};
      skipWs();
      if (text[pos] === "}") { pos++; return obj; }
      for (;;) {
        skipWs();
        if (text[pos] !== '"') error("expected object key");
        const key = parseString();
        skipWs();
        if (text[pos] !== ":") error("expected ':'");
        pos++;
        obj[key] = parseValue(path ? `${path}.${key}` : key);
        skipWs();
        if (text[pos] === ",") { pos++; continue; }
        if (text[pos] === "}") { pos++; return obj; }
        error("expected ',' or '}'");
      }
    }
    if (ch === "[") {
      pos++;
      const arr: unknown[] = [];
      skipWs();
      if (text[pos] === "]") { pos++; return arr; }
      for (;;) {
        arr.push(parseValue(`${path}[${arr.length}]`));
        skipWs();
        if (text[pos] === ",") { pos++; continue; }
        if (text[pos] === "]") { pos++; return arr; }
        error("expected ',' or ']'");
      }
    }
    if (ch === '"') return parseString();
    if (text.startsWith("true", pos)) { pos += 4; return true; }
    if (text.startsWith("false", pos)) { pos += 5; return false; }
    if (text.startsWith("null", pos)) { pos += 4; return null; }

    const match = /^-?(0|[1-9]\d*)(\.\d+)?([eE][+-]?\d+)?/.exec(text.slice(pos));
    if (!match) error(`unexpected character '${ch}'`);
    const lexeme = match[0];
    pos += lexeme.length;
    numbers.set(path, lexeme);
    return Number(lexeme);
  }

  const value = parseValue("");
  skipWs();
  if (pos !== text.length) error("trailing content");
  return { value, numbers };
}

export const METRIC_KEYS = [
  "phonation_time_ms",
  "pitch_change_mel",
  "duration_s",
  "reaction_time_ms",
  "score",
  "mean_pitch_mel",
] as const;

export const ABSENT = "—";

export interface SessionRow {
  id: string;
  startedAt: string;
  estimator: string;
  metrics: Record<string, string>; // raw lexemes as sent by the server
}

export function sessionRows(responseText: string): SessionRow[] {
  const { value, numbers } = parseWithRawNumbers(responseText);
  const sessions = value as Array<Record<string, unknown>>;
  return sessions.map((session, i) => {
    const metrics: Record<string, string> = {};
    for (const key of METRIC_KEYS) {
      metrics[key] = numbers.get(`[${i}].metrics.${key}`) ?? ABSENT;
    }
    return {
      id: session.id as string,
      startedAt: session.started_at as string,
      estimator: session.estimator_name as string,
      metrics,
    };
  });
}

export interface TrendView {
  metricName: string;
  n: number;
  slope: string; // raw lexeme or ABSENT
  points: { index: number; startedAt: string; value: string }[];
}

export function trendView(responseText: string): TrendView {
  const { value, numbers } = parseWithRawNumbers(responseText);
  const trend = value as {
    metric_name: string;
    n: number;
    points: Array<{ session_index: number; started_at: string }>;
  };
  return {
    metricName: trend.metric_name,
    n: trend.n,
    slope: numbers.get("slope") ?? ABSENT,
    points: trend.points.map((p, i) => ({
      index: p.session_index,
      startedAt: p.started_at,
      value: numbers.get(`points[${i}].value`) ?? ABSENT,
    })),
  };
}

export interface EmrSummary {
  schemaVersion: number;
  patientName: string;
  sessionCount: number;
  factors: string[];
}

export function emrSummary(responseText: string): EmrSummary {
  const { value } = parseWithRawNumbers(responseText);
  const doc = value as {
    schema_version: number;
    patient: { display_name: string };
    sessions: unknown[];
    trends: Record<string, unknown>;
  };
  return {
    schemaVersion: doc.schema_version,
    patientName: doc.patient.display_name,
    sessionCount: doc.sessions.length,
    factors: Object.keys(doc.trends),
  };
}
