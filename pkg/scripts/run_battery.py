"""Run the seeded inequality battery and print a per-check tally.

    python scripts/run_battery.py --count 200 --seed 0 [--numeric] [--json]
"""

import argparse
import json
import sys
import time

from unavoidable.battery import BatteryConfig, run_battery


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--numeric", action="store_true", help="also run the float-valued checks")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    start = time.perf_counter()
    summary = run_battery(BatteryConfig(count=args.count, seed=args.seed, numeric=args.numeric))
    elapsed = time.perf_counter() - start
    if args.json:
        print(json.dumps(summary.as_dict(), indent=2))
    else:
        for name, (passed, total) in sorted(summary.counts.items()):
            print(f"{name:<28} {passed}/{total}")
        for v in summary.violations:
            print("VIOLATION", v)
        print(f"{'ok' if summary.ok else 'FAILED'} in {elapsed:.1f}s")
    return 0 if summary.ok else 1


if __name__ == "__main__":
    sys.exit(main())
