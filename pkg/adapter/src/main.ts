#!/usr/bin/env node
// Stdin/stdout entry point: one JSON request per process, one JSON
// report on stdout. Exit 0 whenever a schema-valid report was emitted
// (including in-band "error" statuses); protocol violations go to
// stderr with exit 2.

import { ProtocolError, parseRequest, runAdapter } from "./adapter.js";

async function readStdin(): Promise<string> {
  const chunks: Buffer[] = [];
  for await (const chunk of process.stdin) {
    chunks.push(chunk as Buffer);
  }
  return Buffer.concat(chunks).toString("utf-8");
}

async function main(): Promise<number> {
  let raw: unknown;
  try {
    raw = JSON.parse(await readStdin());
  } catch (exc) {
    process.stderr.write(`invalid JSON request: ${String(exc)}\n`);
    return 2;
  }
  try {
    const report = await runAdapter(parseRequest(raw));
    process.stdout.write(JSON.stringify(report) + "\n");
    return 0;
  } catch (exc) {
    if (exc instanceof ProtocolError) {
      process.stderr.write(`protocol error: ${exc.message}\n`);
      return 2;
    }
    process.stderr.write(`adapter failure: ${String(exc)}\n`);
    return 2;
  }
}

main().then((code) => {
  process.exitCode = code;
});
