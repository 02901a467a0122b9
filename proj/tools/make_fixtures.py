#!/usr/bin/env python3
"""Regenerate the bundled b-file fixtures under data/.

Everything is computed here from first principles (substitution word +
greedy sums), independently of the C++ library, so the comparison suite
cross-checks two implementations. Files follow the OEIS b-file format:
optional '#' comments, then "index value" lines.
"""
import os
import bisect

OUT = os.path.join(os.path.dirname(__file__), "..", "data")

def sigma_word(min_len):
    w = "0"
    while len(w) < min_len:
        w = "".join({"0": "01", "1": "02", "2": "0"}[c] for c in w)
    return w

WORD = sigma_word(20000)
A = [i for i, c in enumerate(WORD) if c == "1"]
B = [i for i, c in enumerate(WORD) if c == "0"]
C = [i for i, c in enumerate(WORD) if c == "2"]

T = [0, 0, 1]
while len(T) < 40:
    T.append(T[-1] + T[-2] + T[-3])

def greedy_word(n):
    idxs = []
    while n:
        i = max(j for j in range(3, len(T)) if T[j] <= n)
        idxs.append(i - 3)
        n -= T[i]
    top = idxs[0]
    return "".join("1" if (top - p) in idxs else "0" for p in range(top + 1))

def digit_word(n):
    out = ""
    while True:
        c = WORD[n]
        out += {"1": "1", "0": "0", "2": "2"}[c]
        if n == 0:
            return out
        n = bisect.bisect_left({"1": A, "0": B, "2": C}[c], n)

def write(name, pairs):
    path = os.path.join(OUT, name)
    with open(path, "w") as f:
        f.write(f"# fixture {name}, regenerate with tools/make_fixtures.py\n")
        for i, v in pairs:
            f.write(f"{i} {v}\n")
    print(f"wrote {path} ({len(pairs)} terms)")

def main():
    os.makedirs(OUT, exist_ok=True)
    write("b080843.txt", [(n, WORD[n]) for n in range(1000)])
    write("b278039.txt", list(enumerate(B[:1000])))
    write("b278040.txt", list(enumerate(A[:1000])))
    write("b278041.txt", list(enumerate(C[:1000])))
    write("b278038.txt", [(n, greedy_word(n)) for n in range(1, 1001)])
    write("b278044.txt", [(n, len(greedy_word(n))) for n in range(1, 1001)])
    # digit words are stored as plain integers, so leading zeros drop out
    write("b319195.txt", [(n, int(digit_word(n))) for n in range(1, 1001)])

if __name__ == "__main__":
    main()
