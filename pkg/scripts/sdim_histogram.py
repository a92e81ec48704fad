"""Number of c=24 solutions per total superdimension, split even/super."""

from collections import Counter
from fractions import Fraction

from weightone.census import enumerate_solutions


def main():
    rep = enumerate_solutions()
    even = Counter(s.total_sdim for s in rep.solutions if s.purely_even)
    sup = Counter(s.total_sdim for s in rep.solutions if not s.purely_even)
    print(f"{'sdim':>5} {'ratio':>7} {'even':>5} {'super':>6}")
    for total in sorted(set(even) | set(sup)):
        ratio = str(Fraction(total - 24, 24))
        print(f"{total:>5} {ratio:>7} {even[total]:>5} {sup[total]:>6}")
    print(rep.summary())


if __name__ == "__main__":
    main()
