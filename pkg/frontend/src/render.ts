import { mkdirSync, writeFileSync } from "node:fs";
import { dirname, join } from "node:path";
import sharp from "sharp";

import { CsvError, readCsv } from "./csv.js";
import { FigureRecipe } from "./recipes.js";
import { renderFigure } from "./svg.js";

export interface RenderResult {
  svgPath: string;
  pngPath: string;
}

/** Locate a scenario's CSV under a data root laid out as <root>/<scenario>/<scenario>.csv. */
export function scenarioCsvPath(dataRoot: string, scenario: string): string {
  return join(dataRoot, scenario, `${scenario}.csv`);
}

/**
 * Render one figure to <outDir>/<id>.svg and <outDir>/<id>.png.
 *
 * Reads the recipe's CSV, validates the required columns, and writes both
 * image formats. Output is deterministic for identical inputs.
 */
export async function render(
  recipe: FigureRecipe,
  csvPath: string,
  outDir: string,
): Promise<RenderResult> {
  const table = readCsv(csvPath, recipe.columns);
  const panels = recipe.build(table);
  if (panels.length === 0) {
    throw new CsvError(`recipe ${recipe.id}: no matching data in ${csvPath}`);
  }
  const svg = renderFigure(panels, recipe.layout);

  const svgPath = join(outDir, `${recipe.id}.svg`);
  const pngPath = join(outDir, `${recipe.id}.png`);
  mkdirSync(dirname(svgPath), { recursive: true });
  writeFileSync(svgPath, svg);
  const png = await sharp(Buffer.from(svg)).png().toBuffer();
  writeFileSync(pngPath, png);
  return { svgPath, pngPath };
}

/** Render every recipe against CSVs under dataRoot; returns results keyed by figure id. */
export async function renderAll(
  recipes: FigureRecipe[],
  dataRoot: string,
  outDir: string,
): Promise<Record<string, RenderResult>> {
  const results: Record<string, RenderResult> = {};
  for (const recipe of recipes) {
    results[recipe.id] = await render(
      recipe,
      scenarioCsvPath(dataRoot, recipe.scenario),
      outDir,
    );
  }
  return results;
}
