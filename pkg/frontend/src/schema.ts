/** Figure catalog: each kind names the study CSV it consumes. */

export type FigureKind =
  | "crb-scatter"
  | "objective-compare"
  | "convergence"
  | "batch-compare"
  | "sequential-compare"
  | "deltaf-sweep"
  | "k-sweep";

export interface FigureSpec {
  kind: FigureKind;
  csvPath: string;
  outPath: string;
}

/** Columns a CSV must carry for each figure kind. */
export const REQUIRED_COLUMNS: Record<FigureKind, string[]> = {
  "crb-scatter": ["code_id", "lb", "mse"],
  "objective-compare": ["lb", "lb2"],
  convergence: ["iter", "mean_lb2"],
  "batch-compare": ["snr_db", "mode", "mse", "exact_fraction"],
  "sequential-compare": ["sigma2_db", "n_measurements", "mode", "mse", "exact_fraction"],
  "deltaf-sweep": ["delta_f", "mode", "mse"],
  "k-sweep": ["k", "mode", "mse"],
};

/** Columns holding labels rather than numbers. */
export const TEXT_COLUMNS = new Set(["mode"]);

export const FIGURE_KINDS = Object.keys(REQUIRED_COLUMNS) as FigureKind[];

export class SchemaError extends Error {}
