"""Brute-force reference implementations, deliberately naive."""

from itertools import product


def all_factors(w):
    return {w[i:j] for i in range(len(w) + 1) for j in range(i, len(w) + 1)}


def shortest_palindrome_extension(w):
    letters = sorted(set(w)) or [""]
    for k in range(len(w) + 1):
        for t in product(letters, repeat=k):
            c = w + "".join(t)
            if c == c[::-1]:
                return c


def longest_palindromic_suffix(w):
    return next(w[i:] for i in range(len(w) + 1) if w[i:] == w[i:][::-1])


def extension_words(w, u):
    return {f for f in all_factors(w) if len(f) == len(u) + 2 and f[1:-1] == u}


def has_property_p(w):
    facts = all_factors(w)
    for u in facts:
        ext = [f for f in facts if len(f) == len(u) + 2 and f[1:-1] == u]
        for p in ext:
            for q in ext:
                if not {p[0], p[-1]} & {q[0], q[-1]}:
                    return False
    return True


def locally_balanced(w, palindromes_only=False):
    facts = all_factors(w)
    for u in facts:
        if palindromes_only and u != u[::-1]:
            continue
        ext = [f for f in facts if len(f) == len(u) + 2 and f[1:-1] == u]
        if not any(all(f[0] == a or f[-1] == a for f in ext) for a in set(w)):
            if ext:
                return False
    return True


def balanced(w, a):
    facts = all_factors(w)
    return all(abs(u.count(a) - v.count(a)) <= 1
               for u in facts for v in facts if len(u) == len(v))


def letter_image(kind, a, w):
    out = []
    for x in w:
        if x == a:
            out.append(x)
        elif kind == "L":
            out.append(a + x)
        else:
            out.append(x + a)
    return "".join(out)
