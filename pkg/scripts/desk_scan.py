#!/usr/bin/env python3
"""Scan [1, limit] for m != 10 with I(m) = 9/5 and log throughput.

    python scripts/desk_scan.py --limit 100000000 --workers 8
"""

import argparse
import json
import os
from dataclasses import asdict, dataclass

from tenfriends.search import SearchConfig, scan_for_friend


@dataclass
class Experiment:
    limit: int = 10**7
    mode: str = "unconditional"
    workers: int = os.cpu_count() or 1
    chunk: int = 1 << 20


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--limit", type=int, default=Experiment.limit)
    p.add_argument("--mode", default=Experiment.mode)
    p.add_argument("--workers", type=int, default=Experiment.workers)
    p.add_argument("--chunk", type=int, default=Experiment.chunk)
    exp = Experiment(**vars(p.parse_args()))
    out = scan_for_friend(SearchConfig(exp.limit, exp.mode, exp.chunk, exp.workers))
    rate = out.scanned / out.elapsed if out.elapsed else float("inf")
    print(json.dumps({"config": asdict(exp), **out.as_dict(timing=True), "per_second": round(rate)}, indent=2))


if __name__ == "__main__":
    main()
