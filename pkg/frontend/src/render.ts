import * as echarts from "echarts";
import type { EChartsOption, SeriesOption } from "echarts";

import { distinct, numbers, parseStudyCsv, Row } from "./csv.js";
import { FigureKind, SchemaError } from "./schema.js";

const MODE_LABELS: Record<string, string> = {
  random: "Random Mode",
  adaptive1: "Adaptive Mode 1",
  adaptive2: "Adaptive Mode 2",
  predefined: "Predefined",
  adaptive: "Adaptive",
};

function modeLabel(mode: string): string {
  return MODE_LABELS[mode] ?? mode;
}

interface Size {
  width: number;
  height: number;
}

const DEFAULT_SIZE: Size = { width: 860, height: 560 };

function renderOption(option: EChartsOption, size: Size): string {
  const chart = echarts.init(null, null, {
    renderer: "svg",
    ssr: true,
    width: size.width,
    height: size.height,
  });
  try {
    chart.setOption({ animation: false, ...option });
    return chart.renderToSVGString();
  } finally {
    chart.dispose();
  }
}

/** (x, y) pairs of one mode's rows, sorted by x. */
function modeSeries(rows: Row[], mode: string, x: string, y: string): number[][] {
  return rows
    .filter((row) => row.mode === mode)
    .map((row) => [Number(row[x]), Number(row[y])])
    .sort((a, b) => a[0] - b[0]);
}

function scatterOption(
  points: number[][],
  xName: string,
  yName: string,
  yLog: boolean,
  title: string,
): EChartsOption {
  return {
    title: { text: title, left: "center" },
    grid: { left: 80, right: 40, top: 60, bottom: 60 },
    xAxis: { type: "value", name: xName, nameLocation: "middle", nameGap: 30, scale: true },
    yAxis: {
      type: yLog ? "log" : "value",
      name: yName,
      nameLocation: "middle",
      nameGap: 55,
      scale: true,
    },
    series: [{ type: "scatter", symbolSize: 7, data: points }],
  };
}

function crbScatter(rows: Row[]): EChartsOption {
  const points = rows.map((row) => [Number(row.lb), Number(row.mse)]);
  return scatterOption(
    points,
    "lower bound LB(c)",
    "MSE",
    true,
    "Recovery MSE vs. constrained lower bound",
  );
}

function objectiveCompare(rows: Row[]): EChartsOption {
  const points = rows.map((row) => [Number(row.lb2), Number(row.lb)]);
  return scatterOption(
    points,
    "LB2(c)",
    "LB(c)",
    false,
    "Bound vs. least-squares surrogate over random codes",
  );
}

function convergence(rows: Row[]): EChartsOption {
  const points = rows
    .map((row) => [Number(row.iter), Number(row.mean_lb2)])
    .sort((a, b) => a[0] - b[0]);
  return {
    title: { text: "Mean LB2 per descent iteration", left: "center" },
    grid: { left: 80, right: 40, top: 60, bottom: 60 },
    xAxis: { type: "value", name: "iteration", nameLocation: "middle", nameGap: 30 },
    yAxis: { type: "value", name: "mean LB2", nameLocation: "middle", nameGap: 55, scale: true },
    series: [{ type: "line", showSymbol: false, data: points }],
  };
}

/** Two panels side by side: MSE (log) and exact-support fraction. */
function batchCompare(rows: Row[]): { option: EChartsOption; size: Size } {
  const modes = distinct(rows, "mode");
  const series: SeriesOption[] = [];
  for (const [panel, metric] of (["mse", "exact_fraction"] as const).entries()) {
    for (const mode of modes) {
      series.push({
        type: "line",
        name: modeLabel(mode),
        xAxisIndex: panel,
        yAxisIndex: panel,
        data: modeSeries(rows, mode, "snr_db", metric),
      });
    }
  }
  const option: EChartsOption = {
    legend: { top: 8 },
    title: [
      { text: "MSE vs. SNR", left: "22%", top: 36, textAlign: "center" },
      { text: "Exact-support fraction vs. SNR", left: "72%", top: 36, textAlign: "center" },
    ],
    grid: [
      { left: 80, right: "55%", top: 80, bottom: 60 },
      { left: "55%", right: 40, top: 80, bottom: 60 },
    ],
    xAxis: [
      { type: "value", gridIndex: 0, name: "SNR (dB)", nameLocation: "middle", nameGap: 30 },
      { type: "value", gridIndex: 1, name: "SNR (dB)", nameLocation: "middle", nameGap: 30 },
    ],
    yAxis: [
      { type: "log", gridIndex: 0, name: "MSE", nameLocation: "middle", nameGap: 55 },
      { type: "value", gridIndex: 1, name: "fraction", nameLocation: "middle", nameGap: 45, min: 0, max: 1 },
    ],
    series,
  };
  return { option, size: { width: 1000, height: 520 } };
}

/** One row of MSE/fraction panels per noise level. */
function sequentialCompare(rows: Row[]): { option: EChartsOption; size: Size } {
  const levels = distinct(rows, "sigma2_db");
  const modes = distinct(rows, "mode");
  const panelHeight = 300;
  const size: Size = { width: 1000, height: 80 + panelHeight * Math.max(levels.length, 1) };

  const grids: NonNullable<EChartsOption["grid"]>[] = [];
  const xAxes: object[] = [];
  const yAxes: object[] = [];
  const titles: object[] = [{}];
  const series: SeriesOption[] = [];

  levels.forEach((level, levelIndex) => {
    const levelRows = rows.filter((row) => row.sigma2_db === level);
    const top = 80 + levelIndex * panelHeight;
    for (const [column, metric] of (["mse", "exact_fraction"] as const).entries()) {
      const panel = 2 * levelIndex + column;
      grids.push({
        left: column === 0 ? 80 : 560,
        width: 360,
        top,
        height: panelHeight - 80,
      });
      xAxes.push({
        type: "value",
        gridIndex: panel,
        name: "measurements",
        nameLocation: "middle",
        nameGap: 28,
        scale: true,
      });
      yAxes.push(
        column === 0
          ? { type: "log", gridIndex: panel, name: "MSE", nameLocation: "middle", nameGap: 55 }
          : {
              type: "value",
              gridIndex: panel,
              name: "fraction",
              nameLocation: "middle",
              nameGap: 45,
              min: 0,
              max: 1,
            },
      );
      titles.push({
        text: `${column === 0 ? "MSE" : "Exact-support fraction"}, noise ${level} dB`,
        left: column === 0 ? 260 : 740,
        top: top - 36,
        textAlign: "center",
        textStyle: { fontSize: 13 },
      });
      for (const mode of modes) {
        series.push({
          type: "line",
          name: modeLabel(mode),
          xAxisIndex: panel,
          yAxisIndex: panel,
          data: modeSeries(levelRows, mode, "n_measurements", metric),
        });
      }
    }
  });

  const option = {
    legend: { top: 8 },
    title: titles,
    grid: grids,
    xAxis: xAxes,
    yAxis: yAxes,
    series,
  } as EChartsOption;
  return { option, size };
}

function modeLines(
  rows: Row[],
  x: string,
  xName: string,
  xLog: boolean,
  title: string,
): EChartsOption {
  const modes = distinct(rows, "mode");
  return {
    legend: { top: 8 },
    title: { text: title, left: "center", top: 32 },
    grid: { left: 80, right: 40, top: 80, bottom: 60 },
    xAxis: {
      type: xLog ? "log" : "value",
      name: xName,
      nameLocation: "middle",
      nameGap: 30,
    },
    yAxis: { type: "log", name: "MSE", nameLocation: "middle", nameGap: 55 },
    series: modes.map((mode) => ({
      type: "line",
      name: modeLabel(mode),
      data: modeSeries(rows, mode, x, "mse"),
    })),
  };
}

/** Render one figure kind from CSV text to an SVG string. */
export function renderFigure(kind: FigureKind, csvText: string): string {
  const rows = parseStudyCsv(csvText, kind);
  switch (kind) {
    case "crb-scatter":
      return renderOption(crbScatter(rows), DEFAULT_SIZE);
    case "objective-compare":
      return renderOption(objectiveCompare(rows), DEFAULT_SIZE);
    case "convergence":
      return renderOption(convergence(rows), DEFAULT_SIZE);
    case "batch-compare": {
      const { option, size } = batchCompare(rows);
      return renderOption(option, size);
    }
    case "sequential-compare": {
      const { option, size } = sequentialCompare(rows);
      return renderOption(option, size);
    }
    case "deltaf-sweep":
      return renderOption(
        modeLines(rows, "delta_f", "frequency step (Hz)", true, "MSE vs. frequency step size"),
        DEFAULT_SIZE,
      );
    case "k-sweep":
      return renderOption(
        modeLines(rows, "k", "targets K", false, "MSE vs. number of targets"),
        DEFAULT_SIZE,
      );
    default: {
      const exhausted: never = kind;
      throw new SchemaError(`unknown figure kind ${String(exhausted)}`);
    }
  }
}
