import { readFileSync, existsSync } from "node:fs";

/** Raised when a CSV file is missing, empty, or lacks required columns. */
export class CsvError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "CsvError";
  }
}

export interface CsvTable {
  header: string[];
  /** One record per data row, keyed by column name; cells are raw strings. */
  rows: Record<string, string>[];
}

/** Parse simple comma-separated text (no quoting) with a header row. */
export function parseCsv(text: string): CsvTable {
  const lines = text.split("\n").filter((line) => line.length > 0);
  if (lines.length === 0) {
    throw new CsvError("CSV has no header row");
  }
  const header = lines[0].split(",");
  const rows: Record<string, string>[] = [];
  for (let i = 1; i < lines.length; i++) {
    const cells = lines[i].split(",");
    if (cells.length !== header.length) {
      throw new CsvError(
        `CSV row ${i} has ${cells.length} cells, expected ${header.length}`,
      );
    }
    const row: Record<string, string> = {};
    for (let j = 0; j < header.length; j++) {
      row[header[j]] = cells[j];
    }
    rows.push(row);
  }
  return { header, rows };
}

/** Read and parse a CSV file, checking that the required columns exist. */
export function readCsv(path: string, requiredColumns: string[]): CsvTable {
  if (!existsSync(path)) {
    throw new CsvError(`CSV file not found: ${path}`);
  }
  const table = parseCsv(readFileSync(path, "utf8"));
  for (const col of requiredColumns) {
    if (!table.header.includes(col)) {
      throw new CsvError(
        `CSV ${path} is missing column "${col}" (has: ${table.header.join(", ")})`,
      );
    }
  }
  if (table.rows.length === 0) {
    throw new CsvError(`CSV ${path} has no data rows`);
  }
  return table;
}

/** Extract a numeric column from a subset of rows. */
export function numericColumn(rows: Record<string, string>[], column: string): number[] {
  return rows.map((row) => {
    const value = Number(row[column]);
    if (!Number.isFinite(value)) {
      throw new CsvError(`non-numeric value "${row[column]}" in column "${column}"`);
    }
    return value;
  });
}
