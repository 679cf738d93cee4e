/**
 * Wire types for the one-line JSON runner protocol.
 *
 * Request:  {"source": str, "entry_point": str, "args": [canonical...]}
 * Reply:    {"status":"value","value":...}
 *         | {"status":"raised","kind":str,"message":str}
 *         | {"status":"load_error","kind":str,"message":str}
 *
 * Replies are compact JSON with sorted keys so identical results are
 * byte-identical across runner implementations.
 */

export interface RunnerRequest {
  source: string;
  entry_point: string;
  args: unknown[];
}

export type RunnerReply =
  | { status: "value"; value: unknown }
  | { status: "raised"; kind: string; message: string }
  | { status: "load_error"; kind: string; message: string };

/**
 * Returns a human-readable problem description for a malformed request,
 * or null when the request is well-formed.
 */
export function describeRequestProblem(data: unknown): string | null {
  if (typeof data !== "object" || data === null || Array.isArray(data)) {
    return "request must be a JSON object";
  }
  const record = data as Record<string, unknown>;
  for (const field of ["source", "entry_point", "args"]) {
    if (!(field in record)) {
      return "request missing required fields";
    }
  }
  if (typeof record.source !== "string" || typeof record.entry_point !== "string") {
    return "source and entry_point must be strings";
  }
  if (!Array.isArray(record.args)) {
    return "args must be an array";
  }
  return null;
}
