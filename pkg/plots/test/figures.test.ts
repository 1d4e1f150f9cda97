/**
 * Renders every figure family from golden CSVs and checks the contracts:
 * sweep figures carry exactly one series per scheme, schema violations
 * name the offending column, and rendering is idempotent.
 */

import { mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { describe, expect, it } from "vitest";

import { readSweep, readTrajectory, SchemaError } from "../src/csv.js";
import {
  buildSweepOption,
  buildTrajectoryOption,
  render,
  renderOption,
  sweepSchemes,
} from "../src/figures.js";

const FIXTURES = join(__dirname, "fixtures");
const SWEEP_FILES = [
  "sweep_duration_T.csv",
  "sweep_num_paths.csv",
  "sweep_v_max.csv",
];

function tmpOut(name: string): string {
  return join(mkdtempSync(join(tmpdir(), "plots-")), name);
}

describe("csv loading", () => {
  it("reads the trajectory fixture", () => {
    const rows = readTrajectory(join(FIXTURES, "trajectory_proposed.csv"));
    expect(rows.length).toBe(101); // 1 s horizon, 10 ms slots, slot 0 included
    expect(rows[0].k).toBe(0);
    expect(rows.at(-1)!.time_s).toBeCloseTo(1.0, 12);
  });

  it("names a missing column", () => {
    const rows = readFileSync(
      join(FIXTURES, "sweep_duration_T.csv"),
      "utf-8",
    ).split("\n");
    const broken = rows
      .map((line) => line.split(",").slice(0, -1).join(","))
      .join("\n");
    const path = tmpOut("missing.csv");
    writeFileSync(path, broken);
    expect(() => readSweep(path)).toThrowError(SchemaError);
    expect(() => readSweep(path)).toThrowError(/seed/);
  });

  it("names a malformed numeric cell", () => {
    const path = tmpOut("bad.csv");
    writeFileSync(
      path,
      "grid_index,position_m,gain\n1,0.0006,not-a-number\n",
    );
    expect(() =>
      buildTrajectoryOption({
        kind: "trajectory_panel",
        trajectoryCsv: join(FIXTURES, "trajectory_proposed.csv"),
        landscapeCsv: path,
        outPath: tmpOut("x.svg"),
      }),
    ).toThrowError(/gain/);
  });
});

describe("trajectory panels", () => {
  const schemes = ["proposed", "myopic", "farsighted", "fpa"];

  it.each(schemes)("renders the %s panel", (scheme) => {
    const svg = render({
      kind: "trajectory_panel",
      trajectoryCsv: join(FIXTURES, `trajectory_${scheme}.csv`),
      landscapeCsv: join(FIXTURES, "gain_landscape.csv"),
      outPath: tmpOut(`${scheme}.svg`),
      title: scheme,
    });
    expect(svg).toContain("<svg");
    expect(svg).toContain("</svg>");
    expect(svg.length).toBeGreaterThan(2000);
  });

  it("keeps the flat fpa trajectory a horizontal line", () => {
    const rows = readTrajectory(join(FIXTURES, "trajectory_fpa.csv"));
    const positions = new Set(rows.map((r) => r.position_m));
    expect(positions.size).toBe(1);
    const option = buildTrajectoryOption({
      kind: "trajectory_panel",
      trajectoryCsv: join(FIXTURES, "trajectory_fpa.csv"),
      landscapeCsv: join(FIXTURES, "gain_landscape.csv"),
      outPath: tmpOut("fpa.svg"),
    });
    const svg = renderOption(option);
    expect(svg).toContain("<svg");
  });
});

describe("sweep figures", () => {
  it.each(SWEEP_FILES)("renders %s with one series per scheme", (file) => {
    const spec = {
      kind: "sweep_line" as const,
      sweepCsv: join(FIXTURES, file),
      outPath: tmpOut(file.replace(".csv", ".svg")),
    };
    const rows = readSweep(spec.sweepCsv);
    const schemes = sweepSchemes(rows);
    const option = buildSweepOption(spec);
    const series = option.series as unknown[];
    expect(series.length).toBe(schemes.length);
    expect((series as { name: string }[]).map((s) => s.name)).toEqual(schemes);
    const svg = render(spec);
    expect(svg).toContain("<svg");
  });

  it("keeps one series per scheme when the CSV holds a subset", () => {
    const rows = readFileSync(
      join(FIXTURES, "sweep_v_max.csv"),
      "utf-8",
    )
      .split("\n")
      .filter(
        (line, i) =>
          i === 0 || line.includes("proposed") || line.includes("fpa"),
      )
      .join("\n");
    const path = tmpOut("subset.csv");
    writeFileSync(path, rows);
    const option = buildSweepOption({
      kind: "sweep_line",
      sweepCsv: path,
      outPath: tmpOut("subset.svg"),
    });
    const names = (option.series as { name: string }[]).map((s) => s.name);
    expect(names).toEqual(["proposed", "fpa"]);
  });

  it("orders points by sweep value", () => {
    const option = buildSweepOption({
      kind: "sweep_line",
      sweepCsv: join(FIXTURES, "sweep_num_paths.csv"),
      outPath: tmpOut("ordered.svg"),
    });
    const first = (option.series as { data: [number, number][] }[])[0];
    const xs = first.data.map((d) => d[0]);
    expect(xs).toEqual([...xs].sort((a, b) => a - b));
    expect(xs).toEqual([1, 2, 3, 4, 5, 6, 7, 8]);
  });
});

describe("idempotency", () => {
  it("renders identical SVG on reruns", () => {
    const spec = {
      kind: "sweep_line" as const,
      sweepCsv: join(FIXTURES, "sweep_duration_T.csv"),
      outPath: tmpOut("a.svg"),
    };
    const first = render(spec);
    const second = render({ ...spec, outPath: tmpOut("b.svg") });
    expect(second).toBe(first);
  });
});
