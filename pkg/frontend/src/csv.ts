import Papa from "papaparse";

import { FigureKind, REQUIRED_COLUMNS, SchemaError, TEXT_COLUMNS } from "./schema.js";

export type Row = Record<string, string>;

/**
 * Parse a study CSV and check it against the figure kind's schema: every
 * required column must be present and, for numeric columns, hold finite
 * numbers on every row.  Extra columns are allowed and ignored.
 */
export function parseStudyCsv(text: string, kind: FigureKind): Row[] {
  const parsed = Papa.parse<Row>(text.trim(), {
    header: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const first = parsed.errors[0];
    throw new SchemaError(`CSV parse error: ${first.message} (row ${first.row})`);
  }
  const fields = parsed.meta.fields ?? [];
  for (const column of REQUIRED_COLUMNS[kind]) {
    if (!fields.includes(column)) {
      throw new SchemaError(
        `missing column '${column}' for kind '${kind}' (found: ${fields.join(", ")})`,
      );
    }
  }
  for (const [index, row] of parsed.data.entries()) {
    for (const column of REQUIRED_COLUMNS[kind]) {
      if (TEXT_COLUMNS.has(column)) continue;
      if (!Number.isFinite(Number(row[column]))) {
        throw new SchemaError(
          `non-numeric value '${row[column]}' in column '${column}', data row ${index + 1}`,
        );
      }
    }
  }
  return parsed.data;
}

export function numbers(rows: Row[], column: string): number[] {
  return rows.map((row) => Number(row[column]));
}

/** Distinct values of a column, in first-appearance order. */
export function distinct(rows: Row[], column: string): string[] {
  const seen: string[] = [];
  for (const row of rows) {
    const value = row[column];
    if (!seen.includes(value)) seen.push(value);
  }
  return seen;
}
