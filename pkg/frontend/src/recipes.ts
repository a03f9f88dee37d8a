import { CsvTable, numericColumn } from "./csv.js";
import { PALETTE, Panel, FigureLayout } from "./svg.js";

export type PlotKind = "scatter" | "phase" | "timeseries" | "multi-panel";

export interface FigureRecipe {
  /** Figure identifier; also the output file stem. */
  id: string;
  /** Scenario whose CSV this figure consumes. */
  scenario: string;
  kind: PlotKind;
  xLabel: string;
  yLabel: string;
  /** Columns that must exist in the input CSV. */
  columns: string[];
  layout: FigureLayout;
  /** Turn the parsed CSV into the panels to draw. */
  build: (table: CsvTable) => Panel[];
}

const SINGLE_PANEL: FigureLayout = { columns: 1, panelWidth: 560, panelHeight: 420 };

const VARIANT_TITLES: Record<string, string> = {
  single: "oscillator",
  osc_spin: "oscillator-spin",
  osc_two_spins_decoupled: "oscillator-two spins (decoupled)",
  osc_two_spins_coupled: "oscillator-two spins (coupled)",
  coupled_oscillators: "coupled oscillators",
};

const MULTI_ORDER = [
  "osc_spin",
  "osc_two_spins_decoupled",
  "osc_two_spins_coupled",
  "coupled_oscillators",
];

const ALL_ORDER = ["single", ...MULTI_ORDER];

type Row = Record<string, string>;

function groupBy(rows: Row[], column: string): Map<string, Row[]> {
  const groups = new Map<string, Row[]>();
  for (const row of rows) {
    const key = row[column];
    const bucket = groups.get(key);
    if (bucket) {
      bucket.push(row);
    } else {
      groups.set(key, [row]);
    }
  }
  return groups;
}

/** Rows whose tau cell parses to the requested value (cells carry full float precision). */
function rowsAtTau(rows: Row[], tau: number): Row[] {
  return rows.filter((row) => Number(row.tau) === tau);
}

/** Phase-portrait panels, one per variant, for a fixed tau. */
function phasePanels(table: CsvTable, tau: number): Panel[] {
  const byVariant = groupBy(rowsAtTau(table.rows, tau), "variant");
  return MULTI_ORDER.map((variant, i) => {
    const rows = byVariant.get(variant) ?? [];
    return {
      title: VARIANT_TITLES[variant],
      xLabel: "<x>",
      yLabel: "<p>",
      series: [
        {
          kind: "line" as const,
          x: numericColumn(rows, "x_osc"),
          y: numericColumn(rows, "p_osc"),
          color: PALETTE[i],
        },
      ],
    };
  });
}

export const RECIPES: FigureRecipe[] = [
  {
    id: "fig1",
    scenario: "fig1",
    kind: "scatter",
    xLabel: "D (distance from uniform mixing)",
    yLabel: "final entropy S",
    columns: ["D", "S_final"],
    layout: SINGLE_PANEL,
    build: (table) => [
      {
        title: "Mixing distance vs final entropy",
        xLabel: "D (distance from uniform mixing)",
        yLabel: "final entropy S",
        series: [
          {
            kind: "scatter",
            x: numericColumn(table.rows, "D"),
            y: numericColumn(table.rows, "S_final"),
            color: PALETTE[0],
          },
        ],
      },
    ],
  },
  {
    id: "fig2",
    scenario: "phase_single",
    kind: "phase",
    xLabel: "<x>",
    yLabel: "<p>",
    columns: ["tau", "t", "x", "p"],
    layout: SINGLE_PANEL,
    build: (table) => {
      const byTau = groupBy(table.rows, "tau");
      const series = [...byTau.entries()].map(([tau, rows], i) => ({
        kind: "line" as const,
        x: numericColumn(rows, "x"),
        y: numericColumn(rows, "p"),
        color: PALETTE[i],
        label: `tau = ${Number(tau)}`,
      }));
      return [
        {
          title: "Oscillator phase portrait",
          xLabel: "<x>",
          yLabel: "<p>",
          series,
        },
      ];
    },
  },
  {
    id: "fig3",
    scenario: "entropy_vs_x0",
    kind: "timeseries",
    xLabel: "t",
    yLabel: "entropy S",
    columns: ["x0", "t", "S"],
    layout: SINGLE_PANEL,
    build: (table) => {
      const byX0 = groupBy(table.rows, "x0");
      const series = [...byX0.entries()].map(([x0, rows], i) => ({
        kind: "line" as const,
        x: numericColumn(rows, "t"),
        y: numericColumn(rows, "S"),
        color: PALETTE[i % PALETTE.length],
        label: `x0 = ${x0}`,
      }));
      return [
        {
          title: "Entropy growth by initial displacement",
          xLabel: "t",
          yLabel: "entropy S",
          series,
        },
      ];
    },
  },
  {
    id: "fig5",
    scenario: "phase_multi",
    kind: "multi-panel",
    xLabel: "<x>",
    yLabel: "<p>",
    columns: ["variant", "tau", "t", "x_osc", "p_osc"],
    layout: { columns: 2, panelWidth: 420, panelHeight: 340 },
    build: (table) => phasePanels(table, 0),
  },
  {
    id: "fig6",
    scenario: "phase_multi",
    kind: "multi-panel",
    xLabel: "<x>",
    yLabel: "<p>",
    columns: ["variant", "tau", "t", "x_osc", "p_osc"],
    layout: { columns: 2, panelWidth: 420, panelHeight: 340 },
    build: (table) => phasePanels(table, 0.1),
  },
  {
    id: "fig7",
    scenario: "energy_entropy_sweep",
    kind: "scatter",
    xLabel: "final oscillator energy",
    yLabel: "final entropy S",
    columns: ["variant", "x0", "E_osc_final", "S_final"],
    layout: SINGLE_PANEL,
    build: (table) => {
      const byVariant = groupBy(table.rows, "variant");
      const series = ALL_ORDER.filter((v) => byVariant.has(v)).map((variant, i) => {
        const rows = byVariant.get(variant)!;
        return {
          kind: "scatter" as const,
          x: numericColumn(rows, "E_osc_final"),
          y: numericColumn(rows, "S_final"),
          color: PALETTE[i],
          label: VARIANT_TITLES[variant],
        };
      });
      return [
        {
          title: "Final oscillator energy vs final entropy",
          xLabel: "final oscillator energy",
          yLabel: "final entropy S",
          series,
        },
      ];
    },
  },
  {
    id: "fig8",
    scenario: "entanglement_suite",
    kind: "multi-panel",
    xLabel: "t",
    yLabel: "entropy",
    columns: ["variant", "tau", "t", "S_osc", "S_total"],
    layout: { columns: 2, panelWidth: 420, panelHeight: 320 },
    build: (table) => {
      const byVariant = groupBy(rowsAtTau(table.rows, 0), "variant");
      return ALL_ORDER.filter((v) => byVariant.has(v)).map((variant) => {
        const rows = byVariant.get(variant)!;
        const t = numericColumn(rows, "t");
        return {
          title: `${VARIANT_TITLES[variant]} (tau = 0)`,
          xLabel: "t",
          yLabel: "entropy",
          series: [
            {
              kind: "line" as const,
              x: t,
              y: numericColumn(rows, "S_osc"),
              color: PALETTE[0],
              label: "S oscillator",
            },
            {
              kind: "line" as const,
              x: t,
              y: numericColumn(rows, "S_total"),
              color: PALETTE[1],
              label: "S total",
            },
          ],
        };
      });
    },
  },
  {
    id: "attractor",
    scenario: "entanglement_suite",
    kind: "multi-panel",
    xLabel: "t",
    yLabel: "entropy",
    columns: ["variant", "tau", "t", "S_osc", "S_total"],
    layout: { columns: 2, panelWidth: 420, panelHeight: 320 },
    build: (table) => {
      const byVariant = groupBy(rowsAtTau(table.rows, 0.1), "variant");
      return ALL_ORDER.filter((v) => byVariant.has(v)).map((variant) => {
        const rows = byVariant.get(variant)!;
        const t = numericColumn(rows, "t");
        return {
          title: `${VARIANT_TITLES[variant]} (tau = 0.1)`,
          xLabel: "t",
          yLabel: "entropy",
          series: [
            {
              kind: "line" as const,
              x: t,
              y: numericColumn(rows, "S_osc"),
              color: PALETTE[0],
              label: "S oscillator",
            },
            {
              kind: "line" as const,
              x: t,
              y: numericColumn(rows, "S_total"),
              color: PALETTE[1],
              label: "S total",
            },
          ],
        };
      });
    },
  },
];
