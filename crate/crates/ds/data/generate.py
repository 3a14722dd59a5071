"""Writes the b-file snapshots in this directory.

Independent of the Rust generators: uses sympy for factorization and totients.
Run from any directory: python3 generate.py [--terms N]
"""
import argparse
from math import gcd
from pathlib import Path

from sympy import factorint, totient

HERE = Path(__file__).resolve().parent


def primes_in(n, residues):
    return all(p % 8 in residues for p in factorint(n))


def a192453(n):
    f = factorint(n)
    return f.get(2, 0) <= 1 and all(p % 8 == 1 for p in f if p != 2)


def two_is_square_mod(n):
    return any((x * x - 2) % n == 0 for x in range(n)) if n > 1 else True


def filtered(pred, count):
    out, n = [], 1
    while len(out) < count:
        if pred(n):
            out.append(n)
        n += 1
    return out


def recurrence(a, b, count):
    out = []
    for _ in range(count):
        out.append(a)
        a, b = b, 6 * b - a
    return out


def coprime_triangle(count):
    out, n = [], 1
    while len(out) < count:
        out.extend(1 if gcd(n, k) == 1 else 0 for k in range(1, n + 1))
        n += 1
    return out[:count]


SEQUENCES = {
    "A058529": (1, lambda c: filtered(lambda n: primes_in(n, {1, 7}), c)),
    "A192453": (1, lambda c: filtered(a192453, c)),
    "A225771": (1, lambda c: filtered(lambda n: primes_in(n, {1, 3}), c)),
    "A057126": (1, lambda c: filtered(two_is_square_mod, c)),
    "A023022": (2, lambda c: [1] + [int(totient(n)) // 2 for n in range(3, c + 2)]),
    "A055034": (1, lambda c: [1] + [int(totient(2 * n)) // 2 for n in range(2, c + 1)]),
    "A001109": (0, lambda c: recurrence(0, 1, c)),
    "A001541": (0, lambda c: recurrence(1, 3, c)),
    "A001653": (1, lambda c: recurrence(1, 5, c)),
    "A054521": (1, coprime_triangle),
}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--terms", type=int, default=300)
    args = ap.parse_args()
    for name, (offset, gen) in SEQUENCES.items():
        path = HERE / f"b{name[1:]}.txt"
        with open(path, "w") as f:
            f.write(f"# {name}, {args.terms} terms, written by generate.py\n")
            for i, v in enumerate(gen(args.terms)):
                f.write(f"{offset + i} {v}\n")


if __name__ == "__main__":
    main()
