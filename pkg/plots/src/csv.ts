/**
 * CSV loading for the three file formats the solver CLI emits.
 *
 * Every loader validates the header and each row; a mismatch raises an
 * error naming the offending column so broken pipelines fail loudly.
 */

import { readFileSync } from "node:fs";
import Papa from "papaparse";
import { z } from "zod";

const finite = z.coerce.number().finite();
const finiteOrNan = z.coerce.number();
const integer = z.coerce.number().int();

export const trajectoryRow = z.object({
  k: integer,
  time_s: finite,
  position_m: finite,
  gain: finite,
  rate_bpshz: finite,
});

export const sweepRow = z.object({
  sweep_name: z.string().min(1),
  sweep_value: finite,
  scheme: z.string().min(1),
  mean_rate_bpshz: finiteOrNan,
  std_rate_bpshz: finiteOrNan,
  n_realizations: integer,
  seed: integer,
});

export const landscapeRow = z.object({
  grid_index: integer,
  position_m: finite,
  gain: finite,
});

export type TrajectoryRow = z.infer<typeof trajectoryRow>;
export type SweepRow = z.infer<typeof sweepRow>;
export type LandscapeRow = z.infer<typeof landscapeRow>;

export class SchemaError extends Error {}

function parseCsv<T>(
  path: string,
  schema: z.ZodType<T>,
  columns: string[],
): T[] {
  const text = readFileSync(path, "utf-8");
  const parsed = Papa.parse<Record<string, string>>(text.trim(), {
    header: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const e = parsed.errors[0];
    throw new SchemaError(`${path}: malformed CSV (${e.message} at row ${e.row})`);
  }
  const header = parsed.meta.fields ?? [];
  for (const column of columns) {
    if (!header.includes(column)) {
      throw new SchemaError(`${path}: missing column "${column}"`);
    }
  }
  return parsed.data.map((raw, i) => {
    const result = schema.safeParse(raw);
    if (!result.success) {
      const issue = result.error.issues[0];
      const column = issue.path.join(".") || "?";
      throw new SchemaError(
        `${path}: column "${column}" row ${i + 1}: ${issue.message}`,
      );
    }
    return result.data;
  });
}

export function readTrajectory(path: string): TrajectoryRow[] {
  return parseCsv(path, trajectoryRow, [
    "k",
    "time_s",
    "position_m",
    "gain",
    "rate_bpshz",
  ]);
}

export function readSweep(path: string): SweepRow[] {
  return parseCsv(path, sweepRow, [
    "sweep_name",
    "sweep_value",
    "scheme",
    "mean_rate_bpshz",
    "std_rate_bpshz",
    "n_realizations",
    "seed",
  ]);
}

export function readLandscape(path: string): LandscapeRow[] {
  return parseCsv(path, landscapeRow, ["grid_index", "position_m", "gain"]);
}
