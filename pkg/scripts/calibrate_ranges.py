"""Census counts under alternative lowest-rank conventions for the classical families.

The canonical convention (A1+, B2+, C3+, D4+, B(0,1)+) has no isomorphic
duplicates; the others re-admit low-rank coincidences such as B2 = C2 and are
listed only to show that none of them reproduces the published total.
"""

from weightone.census import RANGE_CONVENTIONS, range_convention_counts


def main():
    counts = range_convention_counts()
    print(f"{'convention':<12} {'ranges':<40} {'total':>7} {'even':>6} {'super':>6}")
    for name, (total, even) in counts.items():
        ranges = " ".join(f"{k}>={v}" for k, v in RANGE_CONVENTIONS[name].items())
        print(f"{name:<12} {ranges:<40} {total:>7} {even:>6} {total - even:>6}")


if __name__ == "__main__":
    main()
