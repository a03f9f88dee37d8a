import { fileURLToPath } from "node:url";
import { dirname, join } from "node:path";

import { RECIPES } from "./recipes.js";
import { renderAll } from "./render.js";

const here = dirname(fileURLToPath(import.meta.url));
const dataRoot = process.argv[2] ?? join(here, "..", "data");
const outDir = process.argv[3] ?? join(here, "..", "figures");

renderAll(RECIPES, dataRoot, outDir)
  .then((results) => {
    for (const [id, result] of Object.entries(results)) {
      console.log(`${id}: ${result.svgPath} ${result.pngPath}`);
    }
  })
  .catch((err) => {
    console.error(String(err));
    process.exitCode = 1;
  });
