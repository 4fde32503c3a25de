import { writeFileSync } from "fs";

import { loadBenchTable, BenchRow } from "./bench.js";
import { loadErrorCurve, ErrorCurve, SchemaError } from "./csv.js";
import { formatTick, linearScale, logScale, Scale } from "./scale.js";
import { el, polyline, svgDocument, textEl } from "./svg.js";

export type FigureKind = "signed-curves" | "abs-log-curves" | "dual-panel" | "comparison-bars";

export interface PlotJob {
  kind: FigureKind;
  inputs: string[];
  output: string;
  /** Semi-major axes to mark as reference orbits on the log panel. */
  comets?: number[];
  width?: number;
  height?: number;
}

const PALETTE = [
  "#1f77b4",
  "#ff7f0e",
  "#2ca02c",
  "#d62728",
  "#9467bd",
  "#8c564b",
  "#e377c2",
  "#7f7f7f",
  "#bcbd22",
  "#17becf",
];

const MARGIN = { top: 42, right: 24, bottom: 52, left: 78 };

interface Panel {
  x0: number;
  y0: number;
  plotWidth: number;
  plotHeight: number;
  xScale: Scale;
  yScale: Scale; // maps data y to svg y (already inverted)
}

function makePanel(
  x0: number,
  y0: number,
  width: number,
  height: number,
  xDomain: [number, number],
  yDomain: [number, number],
  logX: boolean,
  logY: boolean,
): Panel {
  const plotWidth = width - MARGIN.left - MARGIN.right;
  const plotHeight = height - MARGIN.top - MARGIN.bottom;
  const px = x0 + MARGIN.left;
  const py = y0 + MARGIN.top;
  const xScale = (logX ? logScale : linearScale)(xDomain, [px, px + plotWidth]);
  const yScale = (logY ? logScale : linearScale)(yDomain, [py + plotHeight, py]);
  return { x0: px, y0: py, plotWidth, plotHeight, xScale, yScale };
}

function drawFrameAndAxes(panel: Panel, title: string, xLabel: string, yLabel: string): string[] {
  const { x0, y0, plotWidth, plotHeight, xScale, yScale } = panel;
  const bottom = y0 + plotHeight;
  const parts: string[] = [
    el("rect", {
      x: x0,
      y: y0,
      width: plotWidth,
      height: plotHeight,
      fill: "none",
      stroke: "#333333",
      "stroke-width": 1,
    }),
    textEl(x0 + plotWidth / 2, y0 - 16, title, {
      "text-anchor": "middle",
      "font-size": 14,
      "font-weight": "bold",
    }),
    textEl(x0 + plotWidth / 2, bottom + 38, xLabel, { "text-anchor": "middle", "font-size": 12 }),
    el(
      "g",
      { transform: `translate(${(x0 - 58).toFixed(2)} ${(y0 + plotHeight / 2).toFixed(2)}) rotate(-90)` },
      [textEl(0, 0, yLabel, { "text-anchor": "middle", "font-size": 12 })],
    ),
  ];
  for (const tick of panel.xScale.ticks()) {
    const tx = xScale.map(tick);
    parts.push(
      el("line", { x1: tx, y1: bottom, x2: tx, y2: bottom + 5, stroke: "#333333" }),
      el("line", { x1: tx, y1: y0, x2: tx, y2: bottom, stroke: "#dddddd", "stroke-width": 0.5 }),
      textEl(tx, bottom + 18, formatTick(tick), { "text-anchor": "middle", "font-size": 10 }),
    );
  }
  for (const tick of panel.yScale.ticks()) {
    const ty = yScale.map(tick);
    parts.push(
      el("line", { x1: x0 - 5, y1: ty, x2: x0, y2: ty, stroke: "#333333" }),
      el("line", { x1: x0, y1: ty, x2: x0 + plotWidth, y2: ty, stroke: "#dddddd", "stroke-width": 0.5 }),
      textEl(x0 - 8, ty + 3, formatTick(tick), { "text-anchor": "end", "font-size": 10 }),
    );
  }
  return parts;
}

function drawLegend(panel: Panel, names: string[]): string[] {
  const entryHeight = 15;
  const x = panel.x0 + panel.plotWidth - 150;
  const y = panel.y0 + 10;
  const parts = [
    el("rect", {
      x: x - 8,
      y: y - 12,
      width: 152,
      height: names.length * entryHeight + 10,
      fill: "white",
      "fill-opacity": 0.85,
      stroke: "#999999",
      "stroke-width": 0.5,
    }),
  ];
  names.forEach((name, i) => {
    const ly = y + i * entryHeight;
    parts.push(
      el("line", {
        x1: x,
        y1: ly,
        x2: x + 22,
        y2: ly,
        stroke: PALETTE[i % PALETTE.length],
        "stroke-width": 2,
      }),
      textEl(x + 28, ly + 3, name, { "font-size": 10 }),
    );
  });
  return parts;
}

function xDomainOf(curves: ErrorCurve[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const curve of curves) {
    for (const r of curve.records) {
      lo = Math.min(lo, r.a);
      hi = Math.max(hi, r.a);
    }
  }
  return [lo, hi];
}

function signedCurvesBody(curves: ErrorCurve[], x0: number, y0: number, w: number, h: number): string[] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const curve of curves) {
    for (const r of curve.records) {
      lo = Math.min(lo, 100 * r.signedRel);
      hi = Math.max(hi, 100 * r.signedRel);
    }
  }
  const pad = 0.08 * (hi - lo || 1);
  const panel = makePanel(x0, y0, w, h, xDomainOf(curves), [lo - pad, hi + pad], true, false);
  const parts = drawFrameAndAxes(panel, "Signed relative error", "semi-major axis a", "error (%)");
  const zeroY = panel.yScale.map(0);
  parts.push(
    el("line", {
      x1: panel.x0,
      y1: zeroY,
      x2: panel.x0 + panel.plotWidth,
      y2: zeroY,
      stroke: "#555555",
      "stroke-width": 0.8,
      "stroke-dasharray": "4 3",
    }),
  );
  curves.forEach((curve, i) => {
    const points: Array<[number, number]> = curve.records.map((r) => [
      panel.xScale.map(r.a),
      panel.yScale.map(100 * r.signedRel),
    ]);
    parts.push(polyline(points, { stroke: PALETTE[i % PALETTE.length], "stroke-width": 1.4 }));
  });
  parts.push(...drawLegend(panel, curves.map((c) => c.name)));
  return parts;
}

function absLogCurvesBody(
  curves: ErrorCurve[],
  comets: number[],
  x0: number,
  y0: number,
  w: number,
  h: number,
): string[] {
  let maxPpm = -Infinity;
  let minPpm = Infinity;
  for (const curve of curves) {
    for (const r of curve.records) {
      const ppm = 1e6 * r.absRel;
      if (ppm > 0) {
        maxPpm = Math.max(maxPpm, ppm);
        minPpm = Math.min(minPpm, ppm);
      }
    }
  }
  if (!Number.isFinite(maxPpm)) {
    throw new SchemaError("absolute-error panel: every |relative error| is zero");
  }
  // keep the floor within 9 decades of the peak so exact zeros don't flatten the plot
  const floor = Math.max(minPpm, maxPpm * 1e-9);
  const panel = makePanel(x0, y0, w, h, xDomainOf(curves), [floor, maxPpm * 1.5], true, true);
  const parts = drawFrameAndAxes(panel, "Absolute relative error", "semi-major axis a", "|error| (ppm)");
  curves.forEach((curve, i) => {
    const color = PALETTE[i % PALETTE.length];
    let segment: Array<[number, number]> = [];
    const flush = () => {
      if (segment.length > 1) {
        parts.push(polyline(segment, { stroke: color, "stroke-width": 1.4 }));
      }
      segment = [];
    };
    for (const r of curve.records) {
      const ppm = 1e6 * r.absRel;
      if (ppm <= 0) {
        flush(); // log axis cannot represent exact zeros; break the line
        continue;
      }
      segment.push([panel.xScale.map(r.a), panel.yScale.map(Math.max(ppm, floor))]);
    }
    flush();
  });
  comets.forEach((a, i) => {
    const cx = panel.xScale.map(a);
    parts.push(
      el("line", {
        x1: cx,
        y1: panel.y0,
        x2: cx,
        y2: panel.y0 + panel.plotHeight,
        stroke: "#444444",
        "stroke-width": 1,
        "stroke-dasharray": "6 4",
      }),
      textEl(cx + 4, panel.y0 + 14 + 12 * i, `orbit a = ${formatTick(a)}`, {
        "font-size": 10,
        fill: "#444444",
      }),
    );
  });
  parts.push(...drawLegend(panel, curves.map((c) => c.name)));
  return parts;
}

export function renderSignedCurves(curves: ErrorCurve[], width = 820, height = 560): string {
  return svgDocument(width, height, signedCurvesBody(curves, 0, 0, width, height));
}

export function renderAbsLogCurves(
  curves: ErrorCurve[],
  comets: number[] = [],
  width = 820,
  height = 560,
): string {
  return svgDocument(width, height, absLogCurvesBody(curves, comets, 0, 0, width, height));
}

export function renderDualPanel(
  curves: ErrorCurve[],
  comets: number[] = [],
  width = 1480,
  height = 560,
): string {
  const half = width / 2;
  return svgDocument(width, height, [
    ...signedCurvesBody(curves, 0, 0, half, height),
    ...absLogCurvesBody(curves, comets, half, 0, half, height),
  ]);
}

export function renderComparisonBars(rows: BenchRow[], width = 820, height = 560): string {
  const worst = new Map<string, number>();
  for (const row of rows) {
    worst.set(row.method, Math.max(worst.get(row.method) ?? 0, row.maxPpm));
  }
  const entries = [...worst.entries()].sort((p, q) => q[1] - p[1]);
  const values = entries.map(([, v]) => v);
  const lo = Math.min(...values) / 2;
  const hi = Math.max(...values) * 2;
  const panel = makePanel(0, 0, width, height, [lo, hi], [0, 1], true, false);
  const parts: string[] = [
    textEl(panel.x0 + panel.plotWidth / 2, panel.y0 - 16, "Worst relative error by method", {
      "text-anchor": "middle",
      "font-size": 14,
      "font-weight": "bold",
    }),
    textEl(panel.x0 + panel.plotWidth / 2, panel.y0 + panel.plotHeight + 38, "max |error| (ppm)", {
      "text-anchor": "middle",
      "font-size": 12,
    }),
  ];
  for (const tick of panel.xScale.ticks()) {
    const tx = panel.xScale.map(tick);
    parts.push(
      el("line", {
        x1: tx,
        y1: panel.y0,
        x2: tx,
        y2: panel.y0 + panel.plotHeight,
        stroke: "#dddddd",
        "stroke-width": 0.5,
      }),
      textEl(tx, panel.y0 + panel.plotHeight + 18, formatTick(tick), {
        "text-anchor": "middle",
        "font-size": 10,
      }),
    );
  }
  const slot = panel.plotHeight / entries.length;
  const barHeight = Math.min(26, slot * 0.62);
  entries.forEach(([method, ppm], i) => {
    const yMid = panel.y0 + slot * (i + 0.5);
    const xEnd = panel.xScale.map(ppm);
    parts.push(
      el("rect", {
        x: panel.x0,
        y: yMid - barHeight / 2,
        width: Math.max(xEnd - panel.x0, 1),
        height: barHeight,
        fill: PALETTE[i % PALETTE.length],
        "fill-opacity": 0.85,
      }),
      textEl(panel.x0 - 8, yMid + 3, method, { "text-anchor": "end", "font-size": 11 }),
      textEl(xEnd + 6, yMid + 3, `${ppm.toFixed(2)} ppm`, { "font-size": 10 }),
    );
  });
  parts.push(
    el("rect", {
      x: panel.x0,
      y: panel.y0,
      width: panel.plotWidth,
      height: panel.plotHeight,
      fill: "none",
      stroke: "#333333",
      "stroke-width": 1,
    }),
  );
  return svgDocument(width, height, parts);
}

/** Read the job's inputs and write the figure; throws SchemaError on bad input. */
export function render(job: PlotJob): void {
  const { kind, inputs } = job;
  if (inputs.length === 0) {
    throw new SchemaError("no input files given");
  }
  let svg: string;
  if (kind === "comparison-bars") {
    if (inputs.length !== 1) {
      throw new SchemaError(`comparison-bars takes exactly one JSON input, got ${inputs.length}`);
    }
    svg = renderComparisonBars(loadBenchTable(inputs[0]), job.width, job.height);
  } else {
    const curves = inputs.map(loadErrorCurve);
    const comets = job.comets ?? [];
    if (kind === "signed-curves") {
      svg = renderSignedCurves(curves, job.width, job.height);
    } else if (kind === "abs-log-curves") {
      svg = renderAbsLogCurves(curves, comets, job.width, job.height);
    } else if (kind === "dual-panel") {
      svg = renderDualPanel(curves, comets, job.width, job.height);
    } else {
      throw new SchemaError(`unknown figure kind "${kind}"`);
    }
  }
  writeFileSync(job.output, svg);
}
