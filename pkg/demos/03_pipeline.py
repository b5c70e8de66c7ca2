"""End-to-end run on the bundled 20-file corpus, then a look at the outputs.

Equivalent to ``natpref pipeline --config demos/demo_config.json --out-dir demo-run``
run from the repository root. Run with ``python demos/03_pipeline.py [out_dir]``.
"""

import json
import sys
from pathlib import Path

from natpref import cli

HERE = Path(__file__).parent


def main(out_dir="demo-run"):
    config = json.loads((HERE / "demo_config.json").read_text())
    config["roots"] = [str(HERE.parent / r) for r in config["roots"]]
    config["out_dir"] = out_dir
    cfg = cli.RunConfig.from_mapping(config)
    cfg.validate()
    out = cli.run_pipeline(cfg)

    print("median-delta confidence intervals (original - transformed, bits; ° = not significant):")
    print((out / "table_wide.tsv").read_text())

    pairs = [json.loads(line) for line in (out / "pairs.jsonl").read_text().splitlines()]
    print(f"{len(pairs)} survey pairs; the two with the largest preference for the original:")
    for p in sorted(pairs, key=lambda p: p["line_delta"])[:2]:
        print(f"  {p['line_delta']:+.2f}  {p['text_a'].strip()}   vs   {p['text_b'].strip()}")
    print(f"forms and answer key under {out}")


if __name__ == "__main__":
    main(*sys.argv[1:])
