import { execFile } from "node:child_process";
import { mkdtemp, rm, writeFile } from "node:fs/promises";
import { tmpdir } from "node:os";
import path from "node:path";
import { fileURLToPath } from "node:url";

import {
  ADAPTER_VERSION,
  AdapterRequest,
  ExecutionReport,
  ProtocolError,
  Status,
  countAssertionSites,
  errorReport,
  hasTestDeclaration,
} from "./report.js";

const RUNNER_PATH = fileURLToPath(new URL("../py/runner.py", import.meta.url));
const PYTHON = process.env["ADAPTER_PYTHON"] ?? "python3";

interface RunnerResult {
  status: Status;
  covered_arms: number[];
  arms_total: number;
  coverage: number;
  diagnostic: string;
}

function runProcess(
  args: string[],
  timeoutMs: number,
): Promise<{ code: number | null; stdout: string; stderr: string; timedOut: boolean }> {
  return new Promise((resolve) => {
    const child = execFile(
      PYTHON,
      args,
      { timeout: timeoutMs, killSignal: "SIGKILL" },
      (error, stdout, stderr) => {
        const killed = error !== null && (error as { killed?: boolean }).killed === true;
        const code = error === null ? 0 : ((error as { code?: number }).code ?? null);
        resolve({ code: typeof code === "number" ? code : null, stdout, stderr, timedOut: killed });
      },
    );
    void child;
  });
}

/** Run one request end to end and produce a schema-conforming report. */
export async function runAdapter(request: AdapterRequest): Promise<ExecutionReport> {
  const assertionsTotal = countAssertionSites(request.test_source);
  if (!hasTestDeclaration(request.test_source)) {
    return errorReport("no-test-declaration", assertionsTotal);
  }

  const workDir = await mkdtemp(path.join(tmpdir(), "adapter-"));
  try {
    const solutionPath = path.join(workDir, "solution.py");
    const testPath = path.join(workDir, "test_solution.py");
    await writeFile(solutionPath, request.solution_source, "utf-8");
    await writeFile(testPath, request.test_source, "utf-8");

    const run = await runProcess(
      [RUNNER_PATH, solutionPath, testPath],
      Math.ceil(request.timeout_seconds * 1000),
    );
    if (run.timedOut) {
      return errorReport("timeout", assertionsTotal);
    }
    if (run.code !== 0) {
      return errorReport(
        `runner crashed (exit ${run.code}): ${run.stderr.slice(0, 500)}`,
        assertionsTotal,
      );
    }
    let result: RunnerResult;
    try {
      result = JSON.parse(run.stdout) as RunnerResult;
    } catch {
      return errorReport("runner produced unreadable output", assertionsTotal);
    }
    return {
      status: result.status,
      covered_arms: result.covered_arms,
      arms_total: result.arms_total,
      coverage: result.coverage,
      assertions_total: assertionsTotal,
      // Assertion executions are not traced inside the subject runtime;
      // a fully green run is the only state where all sites are known
      // to have fired.
      assertions_executed: result.status === "pass" ? assertionsTotal : 0,
      diagnostic: result.diagnostic,
      adapter_version: ADAPTER_VERSION,
    };
  } finally {
    await rm(workDir, { recursive: true, force: true });
  }
}

export { ProtocolError, parseRequest } from "./report.js";
