"""Count Property-P words by length and by decomposition terminal."""

import argparse
from collections import Counter

from episturm.decomposer import decompose, enumerate_property_p


def census(alphabet: str, max_len: int) -> list[tuple[int, int, Counter]]:
    rows = []
    for n in range(max_len + 1):
        words = enumerate_property_p(alphabet, n)
        kinds = Counter(type(decompose(w, 64).terminal).__name__ for w in words)
        rows.append((n, len(words), kinds))
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--alphabet", default="abc")
    p.add_argument("--max-len", type=int, default=12)
    args = p.parse_args()
    names = ("Exhausted", "Unary", "TernaryCore", "Blocked")
    print(f"{'n':>3} {'words':>7} " + " ".join(f"{k:>11}" for k in names))
    for n, total, kinds in census(args.alphabet, args.max_len):
        print(f"{n:>3} {total:>7} " + " ".join(f"{kinds[k]:>11}" for k in names))


if __name__ == "__main__":
    main()
