"""Regenerate tests/golden; run explicitly, never from the test suite."""
from __future__ import annotations

import json
from pathlib import Path

from artifact import pipeline

GOLDEN = Path(__file__).parent / "golden"
SMALL = [(9, 0), (8, 1), (6, 4), (7, 3), (8, 2)]


def cohomology_record(g: int, n: int) -> dict:
    cx = pipeline.build_complex(g, n, force=True)
    coh = pipeline.cohomology(cx)
    return {"g": g, "n": n, "chain_dims": {str(k): v for k, v in cx.dims().items()},
            "cohomology": {str(k): str(e["specht"]) for k, e in coh.items() if e["dim"]}}


def census_record(reduced_excess: int) -> dict:
    rep = pipeline.census_report(reduced_excess)
    reps = pipeline.generate_virtual_reps(reduced_excess)
    return {"reduced_excess": reduced_excess, "total": rep["total"],
            "table": {f: {str(k): v for k, v in row.items()} for f, row in rep["table"].items()},
            "reps": [pipeline.rep_record(r) for r in reps]}


def main() -> None:
    GOLDEN.mkdir(exist_ok=True)
    for R in range(4):
        (GOLDEN / f"census_r{R}.json").write_text(json.dumps(census_record(R), sort_keys=True, indent=1))
    for g, n in SMALL:
        (GOLDEN / f"cohomology_{g}_{n}.json").write_text(
            json.dumps(cohomology_record(g, n), sort_keys=True, indent=1))


if __name__ == "__main__":
    main()
