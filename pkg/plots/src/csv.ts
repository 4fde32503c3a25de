import { readFileSync } from "fs";
import { basename } from "path";

/** Raised when an input file does not conform to the expected schema. */
export class SchemaError extends Error {}

export const CSV_HEADER = [
  "a",
  "b",
  "h",
  "p_exact",
  "p_approx",
  "signed_rel",
  "abs_rel",
] as const;

export interface ErrorRecord {
  a: number;
  b: number;
  h: number;
  pExact: number;
  pApprox: number;
  signedRel: number;
  absRel: number;
}

export interface ErrorCurve {
  /** Series label, taken from the file name. */
  name: string;
  records: ErrorRecord[];
}

function parseNumber(field: string, row: number, source: string): number {
  // strict: empty strings and stray text must not silently become 0/NaN
  if (field.trim() === "") {
    throw new SchemaError(`${source}: empty numeric field on data row ${row}`);
  }
  const value = Number(field);
  if (!Number.isFinite(value)) {
    throw new SchemaError(`${source}: non-numeric field "${field}" on data row ${row}`);
  }
  return value;
}

export function parseErrorCurveCsv(text: string, source: string, name?: string): ErrorCurve {
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  if (lines.length === 0) {
    throw new SchemaError(`${source}: file is empty`);
  }
  if (lines[0] !== CSV_HEADER.join(",")) {
    throw new SchemaError(
      `${source}: expected header "${CSV_HEADER.join(",")}", got "${lines[0]}"`,
    );
  }
  if (lines.length === 1) {
    throw new SchemaError(`${source}: no data rows`);
  }
  const records: ErrorRecord[] = [];
  for (let i = 1; i < lines.length; i++) {
    const fields = lines[i].split(",");
    if (fields.length !== CSV_HEADER.length) {
      throw new SchemaError(
        `${source}: expected ${CSV_HEADER.length} fields on data row ${i}, got ${fields.length}`,
      );
    }
    const [a, b, h, pExact, pApprox, signedRel, absRel] = fields.map((f) =>
      parseNumber(f, i, source),
    );
    records.push({ a, b, h, pExact, pApprox, signedRel, absRel });
  }
  return { name: name ?? source, records };
}

export function loadErrorCurve(path: string): ErrorCurve {
  const text = readFileSync(path, "utf8");
  const name = basename(path).replace(/\.csv$/i, "");
  return parseErrorCurveCsv(text, path, name);
}
