import { readFileSync } from "fs";

import { SchemaError } from "./csv.js";

export interface BenchRow {
  method: string;
  rangeId: string;
  maxPercent: number;
  maxPpm: number;
  argmaxA: number;
  argmaxB: number;
}

const REQUIRED_KEYS = ["method", "range_id", "max_percent", "max_ppm", "argmax_a", "argmax_b"];

function requireFiniteNumber(value: unknown, key: string, index: number, source: string): number {
  if (typeof value !== "number" || !Number.isFinite(value)) {
    throw new SchemaError(`${source}: row ${index} field "${key}" must be a finite number`);
  }
  return value;
}

export function parseBenchJson(text: string, source: string): BenchRow[] {
  let data: unknown;
  try {
    data = JSON.parse(text);
  } catch (err) {
    throw new SchemaError(`${source}: not valid JSON (${(err as Error).message})`);
  }
  if (!Array.isArray(data) || data.length === 0) {
    throw new SchemaError(`${source}: expected a non-empty array of benchmark rows`);
  }
  return data.map((raw, i) => {
    if (typeof raw !== "object" || raw === null || Array.isArray(raw)) {
      throw new SchemaError(`${source}: row ${i} is not an object`);
    }
    const row = raw as Record<string, unknown>;
    for (const key of REQUIRED_KEYS) {
      if (!(key in row)) {
        throw new SchemaError(`${source}: row ${i} is missing "${key}"`);
      }
    }
    if (typeof row.method !== "string" || typeof row.range_id !== "string") {
      throw new SchemaError(`${source}: row ${i} method/range_id must be strings`);
    }
    return {
      method: row.method,
      rangeId: row.range_id,
      maxPercent: requireFiniteNumber(row.max_percent, "max_percent", i, source),
      maxPpm: requireFiniteNumber(row.max_ppm, "max_ppm", i, source),
      argmaxA: requireFiniteNumber(row.argmax_a, "argmax_a", i, source),
      argmaxB: requireFiniteNumber(row.argmax_b, "argmax_b", i, source),
    };
  });
}

export function loadBenchTable(path: string): BenchRow[] {
  return parseBenchJson(readFileSync(path, "utf8"), path);
}
