#!/usr/bin/env node
/**
 * CLI entry point for the runner shim.
 *
 * Reads exactly one JSON request line from stdin, validates it, spawns a
 * minimal Python interpreter (`python3 -S -E`) running the embedded
 * bootstrap, and relays the bootstrap's single reply line to stdout.
 * A malformed request exits nonzero with a diagnostic on stderr without
 * spawning anything. There is no in-process timeout: the caller owns the
 * execution budget and kills the whole process group on expiry.
 */

import { spawn } from "node:child_process";
import { once } from "node:events";
import type { Readable } from "node:stream";

import { BOOTSTRAP } from "./bootstrap.js";
import { describeRequestProblem } from "./protocol.js";

async function readFirstLine(stream: Readable): Promise<string> {
  let buffered = "";
  for await (const chunk of stream) {
    buffered += chunk.toString("utf-8");
    const newline = buffered.indexOf("\n");
    if (newline >= 0) {
      return buffered.slice(0, newline + 1);
    }
  }
  return buffered;
}

export async function main(): Promise<number> {
  const line = await readFirstLine(process.stdin);

  let parsed: unknown;
  try {
    parsed = JSON.parse(line);
  } catch (err) {
    process.stderr.write(`malformed request: ${(err as Error).message}\n`);
    return 2;
  }
  const problem = describeRequestProblem(parsed);
  if (problem !== null) {
    process.stderr.write(`malformed request: ${problem}\n`);
    return 2;
  }

  const child = spawn("python3", ["-S", "-E", "-c", BOOTSTRAP], {
    stdio: ["pipe", "pipe", "inherit"],
  });
  // Relay the original request bytes: the bootstrap re-parses them, so no
  // JavaScript round-trip can alter number formatting.
  child.stdin.write(line.endsWith("\n") ? line : line + "\n");
  child.stdin.end();

  const chunks: Buffer[] = [];
  child.stdout.on("data", (chunk: Buffer) => chunks.push(chunk));
  const [code] = (await once(child, "close")) as [number | null];
  process.stdout.write(Buffer.concat(chunks));
  return code ?? 1;
}

main().then(
  (code) => process.exit(code),
  (err) => {
    process.stderr.write(`runner failure: ${err}\n`);
    process.exit(1);
  },
);
