/**
 * Figure builders and the SVG renderer.
 *
 * Two figure kinds cover all four figure families: a trajectory panel
 * (position vs. time drawn over the gain landscape, which is plotted
 * sideways against a secondary gain axis so both share the position
 * axis) and a sweep line chart (one line per scheme with whisker error
 * bars from the std column).
 */

import { writeFileSync } from "node:fs";
import * as echarts from "echarts";
import type { EChartsOption, SeriesOption } from "echarts";

import {
  readLandscape,
  readSweep,
  readTrajectory,
  SweepRow,
} from "./csv.js";

export interface TrajectoryPanelSpec {
  kind: "trajectory_panel";
  trajectoryCsv: string;
  landscapeCsv: string;
  outPath: string;
  title?: string;
}

export interface SweepLineSpec {
  kind: "sweep_line";
  sweepCsv: string;
  outPath: string;
  title?: string;
  xLabel?: string;
}

export type FigureSpec = TrajectoryPanelSpec | SweepLineSpec;

const SCHEME_ORDER = ["proposed", "myopic", "farsighted", "fpa"];
const PALETTE: Record<string, string> = {
  proposed: "#c23531",
  myopic: "#2f4554",
  farsighted: "#61a0a8",
  fpa: "#91c7ae",
};

export function buildTrajectoryOption(spec: TrajectoryPanelSpec): EChartsOption {
  const traj = readTrajectory(spec.trajectoryCsv);
  const land = readLandscape(spec.landscapeCsv);
  return {
    animation: false,
    title: { text: spec.title ?? "Antenna trajectory", left: "center" },
    legend: { bottom: 0 },
    grid: { left: 70, right: 30, top: 60, bottom: 60 },
    xAxis: [
      {
        type: "value",
        name: "time (s)",
        nameLocation: "middle",
        nameGap: 28,
        min: 0,
        max: traj[traj.length - 1].time_s,
      },
      {
        type: "value",
        name: "channel power gain",
        nameLocation: "middle",
        nameGap: 28,
        position: "top",
        axisLabel: { formatter: (v: number) => v.toExponential(0) },
      },
    ],
    yAxis: {
      type: "value",
      name: "position (m)",
      min: 0,
      max: Math.max(...land.map((r) => r.position_m)),
    },
    series: [
      {
        name: "gain landscape",
        type: "line",
        xAxisIndex: 1,
        data: land.map((r) => [r.gain, r.position_m]),
        showSymbol: false,
        lineStyle: { width: 1, color: "#bbb" },
        areaStyle: { color: "#eee", opacity: 0.6 },
        z: 1,
      },
      {
        name: "trajectory",
        type: "line",
        xAxisIndex: 0,
        data: traj.map((r) => [r.time_s, r.position_m]),
        showSymbol: false,
        lineStyle: { width: 2.5 },
        z: 2,
      },
    ],
  };
}

/** Schemes present in the sweep rows, in canonical order. */
export function sweepSchemes(rows: SweepRow[]): string[] {
  const present = new Set(rows.map((r) => r.scheme));
  const ordered = SCHEME_ORDER.filter((s) => present.has(s));
  const extras = [...present].filter((s) => !SCHEME_ORDER.includes(s)).sort();
  return [...ordered, ...extras];
}

export function buildSweepOption(spec: SweepLineSpec): EChartsOption {
  const rows = readSweep(spec.sweepCsv);
  const schemes = sweepSchemes(rows);
  const sweepName = rows[0]?.sweep_name ?? "sweep";
  // one series per scheme; error bars ride along as markLine whiskers so
  // the series count stays one-to-one with schemes
  const series: SeriesOption[] = schemes.map((scheme) => {
    const mine = rows
      .filter((r) => r.scheme === scheme)
      .sort((a, b) => a.sweep_value - b.sweep_value);
    return {
      name: scheme,
      type: "line",
      data: mine.map((r) => [r.sweep_value, r.mean_rate_bpshz]),
      symbolSize: 7,
      color: PALETTE[scheme],
      markLine: {
        silent: true,
        symbol: "none",
        lineStyle: { color: PALETTE[scheme] ?? "#333", width: 1 },
        label: { show: false },
        data: mine.flatMap((r) => {
          if (!Number.isFinite(r.mean_rate_bpshz)) return [];
          return [
            [
              { coord: [r.sweep_value, r.mean_rate_bpshz - r.std_rate_bpshz] },
              { coord: [r.sweep_value, r.mean_rate_bpshz + r.std_rate_bpshz] },
            ],
          ];
        }),
      },
    };
  });
  return {
    animation: false,
    title: { text: spec.title ?? `Average rate vs ${sweepName}`, left: "center" },
    legend: { bottom: 0 },
    grid: { left: 70, right: 30, top: 50, bottom: 60 },
    xAxis: {
      type: "value",
      name: spec.xLabel ?? sweepName,
      nameLocation: "middle",
      nameGap: 28,
    },
    yAxis: { type: "value", name: "average rate (bit/s/Hz)", scale: true },
    series,
  };
}

export function renderOption(option: EChartsOption, width = 840, height = 560): string {
  const chart = echarts.init(null, null, {
    renderer: "svg",
    ssr: true,
    width,
    height,
  });
  try {
    chart.setOption(option);
    return stabilizeIds(chart.renderToSVGString());
  } finally {
    chart.dispose();
  }
}

/**
 * Internal element ids and class names carry process-global counters;
 * renumber them in order of first appearance so identical inputs give
 * byte-identical files no matter how many charts were rendered before.
 */
function stabilizeIds(svg: string): string {
  const out = svg.replace(/\bzr\d+-/g, "zr-");
  const seen = new Map<string, string>();
  return out.replace(/zr-cls-(\d+)/g, (match) => {
    if (!seen.has(match)) seen.set(match, `zr-cls-${seen.size}`);
    return seen.get(match)!;
  });
}

/** Render one figure spec to its SVG file and return the SVG string. */
export function render(spec: FigureSpec): string {
  const option =
    spec.kind === "trajectory_panel"
      ? buildTrajectoryOption(spec)
      : buildSweepOption(spec);
  const svg = renderOption(option);
  writeFileSync(spec.outPath, svg, "utf-8");
  return svg;
}
