/**
 * Minimal deterministic SVG plotting: scatter and line panels with axes,
 * tick labels, and an optional legend, tiled in a fixed grid.
 */

export interface Series {
  kind: "line" | "scatter";
  x: number[];
  y: number[];
  color: string;
  label?: string;
}

export interface Panel {
  title: string;
  xLabel: string;
  yLabel: string;
  series: Series[];
}

export interface FigureLayout {
  columns: number;
  panelWidth: number;
  panelHeight: number;
}

export const PALETTE = [
  "#1f77b4",
  "#d62728",
  "#2ca02c",
  "#9467bd",
  "#ff7f0e",
  "#8c564b",
  "#17becf",
  "#7f7f7f",
];

const MARGIN = { left: 62, right: 16, top: 34, bottom: 46 };

function fmt(value: number): string {
  if (value === 0) return "0";
  const abs = Math.abs(value);
  if (abs >= 1e4 || abs < 1e-3) return value.toExponential(1);
  return parseFloat(value.toPrecision(4)).toString();
}

/** Round-number tick positions covering [lo, hi]. */
function ticks(lo: number, hi: number, count = 5): number[] {
  if (lo === hi) {
    return [lo];
  }
  const rawStep = (hi - lo) / count;
  const mag = Math.pow(10, Math.floor(Math.log10(rawStep)));
  let step = mag;
  for (const mult of [1, 2, 2.5, 5, 10]) {
    if (mult * mag >= rawStep) {
      step = mult * mag;
      break;
    }
  }
  const out: number[] = [];
  for (let t = Math.ceil(lo / step) * step; t <= hi + step * 1e-9; t += step) {
    out.push(Math.abs(t) < step * 1e-9 ? 0 : t);
  }
  return out;
}

function dataRange(series: Series[], axis: "x" | "y"): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const s of series) {
    for (const v of s[axis]) {
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
  }
  if (!Number.isFinite(lo)) {
    lo = 0;
    hi = 1;
  }
  if (lo === hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  const pad = (hi - lo) * 0.05;
  return [lo - pad, hi + pad];
}

function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;");
}

function renderPanel(panel: Panel, x0: number, y0: number, w: number, h: number): string {
  const plotX = x0 + MARGIN.left;
  const plotY = y0 + MARGIN.top;
  const plotW = w - MARGIN.left - MARGIN.right;
  const plotH = h - MARGIN.top - MARGIN.bottom;
  const [xLo, xHi] = dataRange(panel.series, "x");
  const [yLo, yHi] = dataRange(panel.series, "y");
  const sx = (v: number) => plotX + ((v - xLo) / (xHi - xLo)) * plotW;
  const sy = (v: number) => plotY + plotH - ((v - yLo) / (yHi - yLo)) * plotH;

  const parts: string[] = [];
  parts.push(
    `<rect x="${plotX}" y="${plotY}" width="${plotW}" height="${plotH}" fill="white" stroke="#333" stroke-width="1"/>`,
  );
  for (const t of ticks(xLo, xHi)) {
    const px = sx(t).toFixed(2);
    parts.push(
      `<line x1="${px}" y1="${plotY + plotH}" x2="${px}" y2="${plotY + plotH + 4}" stroke="#333"/>`,
      `<text x="${px}" y="${plotY + plotH + 16}" font-size="10" text-anchor="middle">${fmt(t)}</text>`,
    );
  }
  for (const t of ticks(yLo, yHi)) {
    const py = sy(t).toFixed(2);
    parts.push(
      `<line x1="${plotX - 4}" y1="${py}" x2="${plotX}" y2="${py}" stroke="#333"/>`,
      `<text x="${plotX - 7}" y="${Number(py) + 3}" font-size="10" text-anchor="end">${fmt(t)}</text>`,
    );
  }
  parts.push(
    `<text x="${plotX + plotW / 2}" y="${y0 + h - 12}" font-size="12" text-anchor="middle">${escapeXml(panel.xLabel)}</text>`,
    `<text x="${x0 + 16}" y="${plotY + plotH / 2}" font-size="12" text-anchor="middle" transform="rotate(-90 ${x0 + 16} ${plotY + plotH / 2})">${escapeXml(panel.yLabel)}</text>`,
    `<text x="${plotX + plotW / 2}" y="${y0 + 20}" font-size="13" text-anchor="middle" font-weight="bold">${escapeXml(panel.title)}</text>`,
  );

  for (const s of panel.series) {
    if (s.kind === "line") {
      const points = s.x
        .map((vx, i) => `${sx(vx).toFixed(2)},${sy(s.y[i]).toFixed(2)}`)
        .join(" ");
      parts.push(
        `<polyline points="${points}" fill="none" stroke="${s.color}" stroke-width="1.2"/>`,
      );
    } else {
      for (let i = 0; i < s.x.length; i++) {
        parts.push(
          `<circle cx="${sx(s.x[i]).toFixed(2)}" cy="${sy(s.y[i]).toFixed(2)}" r="1.6" fill="${s.color}" fill-opacity="0.6"/>`,
        );
      }
    }
  }

  const labeled = panel.series.filter((s) => s.label !== undefined);
  labeled.forEach((s, i) => {
    const lx = plotX + plotW - 108;
    const ly = plotY + 12 + 14 * i;
    parts.push(
      `<line x1="${lx}" y1="${ly - 3}" x2="${lx + 18}" y2="${ly - 3}" stroke="${s.color}" stroke-width="2"/>`,
      `<text x="${lx + 23}" y="${ly}" font-size="10">${escapeXml(s.label!)}</text>`,
    );
  });
  return parts.join("\n");
}

/** Render panels tiled left-to-right, top-to-bottom, into a complete SVG document. */
export function renderFigure(panels: Panel[], layout: FigureLayout): string {
  const rowCount = Math.ceil(panels.length / layout.columns);
  const width = layout.columns * layout.panelWidth;
  const height = rowCount * layout.panelHeight;
  const body = panels
    .map((panel, i) => {
      const col = i % layout.columns;
      const row = Math.floor(i / layout.columns);
      return renderPanel(
        panel,
        col * layout.panelWidth,
        row * layout.panelHeight,
        layout.panelWidth,
        layout.panelHeight,
      );
    })
    .join("\n");
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
    `viewBox="0 0 ${width} ${height}" font-family="Helvetica, Arial, sans-serif">\n` +
    `<rect width="${width}" height="${height}" fill="white"/>\n${body}\n</svg>\n`
  );
}
