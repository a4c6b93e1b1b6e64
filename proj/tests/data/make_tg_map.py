"""Writes the .map table of TG(n, alpha, o) straight from the row rule.

usage: make_tg_map.py K N O CYCLE...   (e.g. 3 3 1 1 2 for the swap of letters 1 and 2)
"""
import itertools
import sys


def main():
    k, n, o = (int(v) for v in sys.argv[1:4])
    cycle = [int(v) for v in sys.argv[4:]]
    alpha = {a: a for a in range(1, k + 1)}
    for i, a in enumerate(cycle):
        alpha[a] = cycle[(i + 1) % len(cycle)]
    print(f"alphabet {k}\narity {n}\ncoarity {n}")
    for x in itertools.product(range(1, k + 1), repeat=n):
        y = list(x)
        if all(c == o for c in x[:-1]):
            y[-1] = alpha[x[-1]]
        print(" ".join(map(str, x)), "->", " ".join(map(str, y)))


if __name__ == "__main__":
    main()
