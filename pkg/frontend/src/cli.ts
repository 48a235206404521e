import { readFileSync, writeFileSync } from "node:fs";
import { argv, exit, stderr, stdout } from "node:process";

import { renderFigure } from "./render.js";
import { FIGURE_KINDS, FigureKind, FigureSpec, SchemaError } from "./schema.js";

const USAGE =
  "usage: render --kind <kind> --csv <path> --out <path>\n" +
  `kinds: ${FIGURE_KINDS.join(", ")}`;

function parseArgs(args: string[]): FigureSpec {
  if (args[0] !== "render") {
    throw new SchemaError(`unknown command '${args[0] ?? ""}'\n${USAGE}`);
  }
  const flags = new Map<string, string>();
  for (let i = 1; i < args.length; i += 2) {
    const flag = args[i];
    const value = args[i + 1];
    if (!flag.startsWith("--") || value === undefined) {
      throw new SchemaError(`malformed arguments near '${flag}'\n${USAGE}`);
    }
    flags.set(flag.slice(2), value);
  }
  const kind = flags.get("kind");
  const csvPath = flags.get("csv");
  const outPath = flags.get("out");
  if (!kind || !csvPath || !outPath) {
    throw new SchemaError(`--kind, --csv and --out are all required\n${USAGE}`);
  }
  if (!FIGURE_KINDS.includes(kind as FigureKind)) {
    throw new SchemaError(`unknown figure kind '${kind}'\n${USAGE}`);
  }
  return { kind: kind as FigureKind, csvPath, outPath };
}

/** Run the renderer; returns the process exit code. */
export function runCli(args: string[]): number {
  let spec: FigureSpec;
  try {
    spec = parseArgs(args);
  } catch (error) {
    stderr.write(`${(error as Error).message}\n`);
    return 2;
  }
  try {
    const csvText = readFileSync(spec.csvPath, "utf-8");
    const svg = renderFigure(spec.kind, csvText);
    writeFileSync(spec.outPath, svg, "utf-8");
  } catch (error) {
    stderr.write(`render failed: ${(error as Error).message}\n`);
    return 2;
  }
  stdout.write(`wrote ${spec.outPath}\n`);
  return 0;
}

// invoked as `node dist/cli.js ...`; stays dormant when imported by tests
if (argv[1]?.endsWith("cli.js")) {
  exit(runCli(argv.slice(2)));
}
