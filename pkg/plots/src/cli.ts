/**
 * Command-line figure renderer for the solver's CSV outputs.
 *
 *   node dist/cli.js trajectory --input trajectory_proposed.csv \
 *       --landscape gain_landscape.csv --out panel.svg
 *   node dist/cli.js sweep --input sweep_duration_T.csv --out rates.svg
 */

import yargs from "yargs";
import { hideBin } from "yargs/helpers";

import { SchemaError } from "./csv.js";
import { render } from "./figures.js";

export async function main(argv: string[]): Promise<number> {
  try {
    await yargs(argv)
      .scriptName("matraj-plots")
      .command(
        "trajectory",
        "render a position-vs-time panel over the gain landscape",
        (y) =>
          y
            .option("input", { type: "string", demandOption: true })
            .option("landscape", { type: "string", demandOption: true })
            .option("out", { type: "string", demandOption: true })
            .option("title", { type: "string" }),
        (args) => {
          render({
            kind: "trajectory_panel",
            trajectoryCsv: args.input,
            landscapeCsv: args.landscape,
            outPath: args.out,
            title: args.title,
          });
          console.log(`wrote ${args.out}`);
        },
      )
      .command(
        "sweep",
        "render mean-rate lines with error bars, one per scheme",
        (y) =>
          y
            .option("input", { type: "string", demandOption: true })
            .option("out", { type: "string", demandOption: true })
            .option("title", { type: "string" })
            .option("x-label", { type: "string" }),
        (args) => {
          render({
            kind: "sweep_line",
            sweepCsv: args.input,
            outPath: args.out,
            title: args.title,
            xLabel: args.xLabel,
          });
          console.log(`wrote ${args.out}`);
        },
      )
      .demandCommand(1)
      .strict()
      .fail((msg, err) => {
        throw err ?? new Error(msg);
      })
      .parseAsync();
    return 0;
  } catch (err) {
    if (err instanceof SchemaError) {
      console.error(`schema error: ${err.message}`);
    } else {
      console.error(`error: ${err instanceof Error ? err.message : err}`);
    }
    return 1;
  }
}

const isMain = process.argv[1]?.endsWith("cli.js");
if (isMain) {
  main(hideBin(process.argv)).then((code) => {
    process.exitCode = code;
  });
}
