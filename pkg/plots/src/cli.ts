#!/usr/bin/env node
/**
 * Render SVG figures from the ellipse-perimeter CLI's output files.
 *
 *   ellipse-perimeter-plots <kind> --out FIG.svg [options] INPUT...
 *
 * kinds:
 *   signed-curves     error-curve CSVs -> signed relative error (%), log-x
 *   abs-log-curves    error-curve CSVs -> |error| in ppm, log-log
 *   dual-panel        both panels side by side
 *   comparison-bars   bench-table JSON -> worst ppm per method
 *
 * options:
 *   --out PATH        output SVG path (required)
 *   --comets A1,A2    mark reference orbits on the log panel
 *   --width N         figure width in px
 *   --height N        figure height in px
 *
 * Exit codes: 0 success, 2 usage error, 1 bad input (schema mismatch, IO).
 */

import { SchemaError } from "./csv.js";
import { render, FigureKind, PlotJob } from "./figures.js";

const KINDS: FigureKind[] = ["signed-curves", "abs-log-curves", "dual-panel", "comparison-bars"];

class UsageError extends Error {}

export function parseArgs(argv: string[]): PlotJob {
  if (argv.length === 0) {
    throw new UsageError("missing figure kind");
  }
  const [kindArg, ...rest] = argv;
  if (!KINDS.includes(kindArg as FigureKind)) {
    throw new UsageError(`unknown figure kind "${kindArg}" (expected ${KINDS.join(", ")})`);
  }
  const job: PlotJob = { kind: kindArg as FigureKind, inputs: [], output: "" };
  for (let i = 0; i < rest.length; i++) {
    const arg = rest[i];
    const next = (name: string): string => {
      if (i + 1 >= rest.length) throw new UsageError(`${name} needs a value`);
      return rest[++i];
    };
    if (arg === "--out") {
      job.output = next("--out");
    } else if (arg === "--comets") {
      job.comets = next("--comets")
        .split(",")
        .map((item) => {
          const value = Number(item);
          if (!Number.isFinite(value) || value <= 0) {
            throw new UsageError(`--comets values must be positive numbers, got "${item}"`);
          }
          return value;
        });
    } else if (arg === "--width") {
      job.width = parsePositiveInt(next("--width"), "--width");
    } else if (arg === "--height") {
      job.height = parsePositiveInt(next("--height"), "--height");
    } else if (arg.startsWith("--")) {
      throw new UsageError(`unknown option "${arg}"`);
    } else {
      job.inputs.push(arg);
    }
  }
  if (!job.output) {
    throw new UsageError("--out is required");
  }
  if (job.inputs.length === 0) {
    throw new UsageError("no input files given");
  }
  return job;
}

function parsePositiveInt(text: string, name: string): number {
  const value = Number(text);
  if (!Number.isInteger(value) || value <= 0) {
    throw new UsageError(`${name} must be a positive integer, got "${text}"`);
  }
  return value;
}

export function main(argv: string[]): number {
  let job: PlotJob;
  try {
    job = parseArgs(argv);
  } catch (err) {
    if (err instanceof UsageError) {
      console.error(`usage error: ${err.message}`);
      return 2;
    }
    throw err;
  }
  try {
    render(job);
  } catch (err) {
    if (err instanceof SchemaError || (err as NodeJS.ErrnoException).code !== undefined) {
      console.error(`error: ${(err as Error).message}`);
      return 1;
    }
    throw err;
  }
  console.log(`wrote ${job.output}`);
  return 0;
}

import { fileURLToPath } from "url";

if (process.argv[1] && fileURLToPath(import.meta.url) === process.argv[1]) {
  process.exit(main(process.argv.slice(2)));
}
