"""Compare the N/3 factor bound with the complexity-certified bound.

For each directive, a prefix of length N is complete up to length k when it
already contains every factor of length k of the infinite word.
"""

import argparse

from episturm.generator import as_directive, certified_factors, epistandard_word
from episturm.words import factors

DIRECTIVES = ("a b", "a b c", "a b c d", "a a b", "Lc | La Lb", "a b b c")


def complete_up_to(d, n: int, reference: int) -> int:
    short = factors(epistandard_word(d, n), n // 2)
    full = factors(epistandard_word(d, reference), n // 2)
    k = 0
    while k + 1 <= n // 2 and short.of_length(k + 1) == full.of_length(k + 1):
        k += 1
    return k


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--length", type=int, default=300)
    args = p.parse_args()
    n = args.length
    print(f"{'directive':<14} {'N//3':>5} {'certified':>9} {'complete':>8}")
    for text in DIRECTIVES:
        d = as_directive(text)
        cert = certified_factors(d, n).reliable_len
        print(f"{text:<14} {n // 3:>5} {cert:>9} {complete_up_to(d, n, 40 * n):>8}")


if __name__ == "__main__":
    main()
