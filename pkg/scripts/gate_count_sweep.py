"""Tabulate gate count against output capacity for competing bases.

Writes the full design grid as CSV and prints, for each capacity both
bases can reach, the cheapest design on either side and the gap between
them.  The higher base wins everywhere the comparison exists, and the
margin widens as the registers grow.
"""

import argparse

from qftadd import sweep, sweep_to_csv


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--bases", default="2,4", help="comma-separated, e.g. 2,4")
    parser.add_argument("--max-capacity", type=int, default=4096)
    parser.add_argument("--output", default="sweep.csv")
    args = parser.parse_args()

    bases = [int(tok) for tok in args.bases.split(",")]
    rows = sweep(bases, args.max_capacity)
    with open(args.output, "w", encoding="utf-8", newline="") as handle:
        handle.write(sweep_to_csv(rows))
    print(f"{len(rows)} designs written to {args.output}")

    best: dict[tuple[int, int], int] = {}
    for row in rows:
        key = (row.d, row.capacity)
        best[key] = min(best.get(key, 10**9), row.gate_count)
    low, high = min(bases), max(bases)
    shared = sorted(
        cap for (d, cap) in best if d == low and (high, cap) in best
    )
    if not shared:
        print(f"no capacity reachable by both base {low} and base {high}")
        return
    print(f"capacity: base-{low} best / base-{high} best / gap")
    for cap in shared:
        a, b = best[(low, cap)], best[(high, cap)]
        print(f"{cap:>9}: {a:>6} {b:>6} {a - b:>6}")


if __name__ == "__main__":
    main()
