#!/usr/bin/env python3
"""Archive jet-ring invariants of the small Grassmannian presentations.

Walks Gr(k, n) for 2 <= n <= max-n, 1 <= k <= n-1 and jet orders up to
max-order, records Krull dimension, finiteness, and Hilbert series of
each jet ideal, and writes the table to a JSON archive.  Rows that blow
past the pair-reduction cap are recorded as skipped with the cap value
rather than silently dropped, so the archive stays an honest record of
what was actually computed.

The k <-> n-k rows are presentations of the same ring with the variable
blocks swapped, so their invariants must agree; the archive keeps both
as a cross-check (test_scripts.py enforces it).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from multalg.grassmann import grassmann_presentation
from multalg.groebner import ReductionLimits, ResourceLimitExceeded
from multalg.jets import jet_invariants, jet_presentation

DEFAULT_OUT = Path(__file__).resolve().parent.parent / "data" / "jet_regression.json"


@dataclass(frozen=True)
class SweepConfig:
    max_n: int = 4
    max_order: int = 3
    max_pair_reductions: int = 200_000
    out: Path = DEFAULT_OUT


def sweep_rows(config: SweepConfig) -> list[dict]:
    limits = ReductionLimits(max_pair_reductions=config.max_pair_reductions)
    rows = []
    for n in range(2, config.max_n + 1):
        for k in range(1, n):
            base = grassmann_presentation(n, k)
            for order in range(1, config.max_order + 1):
                jet = jet_presentation(base, order)
                row = {
                    "n": n,
                    "k": k,
                    "order": order,
                    "variables": len(jet.ring.variables),
                    "relations": len(jet.ring.relations),
                }
                started = time.monotonic()
                try:
                    inv = jet_invariants(jet, limits)
                except ResourceLimitExceeded as e:
                    row["status"] = "skipped"
                    row["reason"] = f"resource cap of {e.cap} pair reductions hit"
                else:
                    row["status"] = "ok"
                    row["krull_dimension"] = inv.krull_dimension
                    row["finite"] = inv.finite
                    row["dimension"] = inv.dimension
                    row["hilbert_series"] = str(inv.hilbert)
                    row["series_weights"] = list(inv.series_weights)
                row["seconds"] = round(time.monotonic() - started, 3)
                rows.append(row)
                print(
                    f"Gr({k},{n}) order {order}: {row['status']}"
                    + (
                        f" krull={row.get('krull_dimension')} hilbert={row.get('hilbert_series')}"
                        if row["status"] == "ok"
                        else f" ({row['reason']})"
                    ),
                    file=sys.stderr,
                )
    return rows


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=4)
    parser.add_argument("--max-order", type=int, default=3)
    parser.add_argument("--max-reductions", type=int, default=200_000)
    parser.add_argument("--out", type=Path, default=DEFAULT_OUT)
    args = parser.parse_args(argv)

    config = SweepConfig(
        max_n=args.max_n,
        max_order=args.max_order,
        max_pair_reductions=args.max_reductions,
        out=args.out,
    )
    rows = sweep_rows(config)
    archive = {
        "generated_by": "scripts/jet_regression.py",
        "max_pair_reductions": config.max_pair_reductions,
        "grading_note": (
            "series_weights records the grading each Hilbert series was "
            "computed under: unit weights when the jet ideal is homogeneous "
            "in the ordinary sense, the level-shifted jet weights otherwise"
        ),
        "rows": rows,
    }
    config.out.parent.mkdir(parents=True, exist_ok=True)
    config.out.write_text(json.dumps(archive, indent=2, sort_keys=True) + "\n")
    skipped = sum(1 for r in rows if r["status"] == "skipped")
    print(f"wrote {len(rows)} rows ({skipped} skipped) to {config.out}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
