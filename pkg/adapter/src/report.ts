export const ADAPTER_VERSION = "1.0.0";

export type Status = "pass" | "failure" | "error";

export interface AdapterRequest {
  solution_source: string;
  test_source: string;
  timeout_seconds: number;
}

export interface ExecutionReport {
  status: Status;
  covered_arms: number[];
  arms_total: number;
  coverage: number;
  assertions_total: number;
  assertions_executed: number;
  diagnostic: string;
  adapter_version: string;
}

/** Raised on malformed requests; reported on stderr with a nonzero exit. */
export class ProtocolError extends Error {}

const TEST_DECLARATION = /class\s+\w+\s*\([^)]*\bTestCase\b[^)]*\)/;
const METHOD_ASSERTION = /\bself\.(?:assert\w*|fail)\s*\(/g;
const BARE_ASSERTION = /^\s*assert\s/gm;

/** True when the test source declares at least one unittest.TestCase subclass. */
export function hasTestDeclaration(testSource: string): boolean {
  return TEST_DECLARATION.test(testSource);
}

/** Static count of assertion-call sites in the test source. */
export function countAssertionSites(testSource: string): number {
  const methods = testSource.match(METHOD_ASSERTION) ?? [];
  const bare = testSource.match(BARE_ASSERTION) ?? [];
  return methods.length + bare.length;
}

export function parseRequest(raw: unknown): AdapterRequest {
  if (typeof raw !== "object" || raw === null) {
    throw new ProtocolError("request must be a JSON object");
  }
  const doc = raw as Record<string, unknown>;
  const solution = doc["solution_source"];
  const test = doc["test_source"];
  const timeout = doc["timeout_seconds"] ?? 10;
  if (typeof solution !== "string" || solution.length === 0) {
    throw new ProtocolError("solution_source must be a nonempty string");
  }
  if (typeof test !== "string" || test.length === 0) {
    throw new ProtocolError("test_source must be a nonempty string");
  }
  if (typeof timeout !== "number" || !(timeout > 0)) {
    throw new ProtocolError("timeout_seconds must be a positive number");
  }
  return { solution_source: solution, test_source: test, timeout_seconds: timeout };
}

export function errorReport(diagnostic: string, assertionsTotal: number): ExecutionReport {
  return {
    status: "error",
    covered_arms: [],
    arms_total: 0,
    coverage: 0.0,
    assertions_total: assertionsTotal,
    assertions_executed: 0,
    diagnostic,
    adapter_version: ADAPTER_VERSION,
  };
}
