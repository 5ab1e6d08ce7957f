#!/usr/bin/env python3
"""Independent oracle for the frozen values in the unit tests.

Uses only exact integers and fractions.Fraction; nothing here shares code with
the C++ library. Run it and compare the printed table with the constants in
tests/unit/*.cpp.
"""
from fractions import Fraction
from math import comb, factorial


def bernoulli_table(n):
    # sum_{k=0}^{m} binom(m+1, k) B_k = 0, B_0 = 1, B_1 = -1/2
    b = [Fraction(1)]
    for m in range(1, n + 1):
        b.append(-sum(comb(m + 1, k) * b[k] for k in range(m)) / (m + 1))
    return b


B = bernoulli_table(80)


def emb(q, mod):
    q = Fraction(q)
    return q.numerator * pow(q.denominator, -1, mod) % mod


def val(q, p):
    q = Fraction(q)
    if q == 0:
        return 10**9
    v, n, d = 0, q.numerator, q.denominator
    while n % p == 0:
        n //= p
        v += 1
    while d % p == 0:
        d //= p
        v -= 1
    return v


def bnp(m, p):
    if m == 0:
        return Fraction(0)
    if m % (p - 1) == 0:
        return B[m] + Fraction(1, p) - 1
    return B[m]


def bnpd(m, p):
    return Fraction(0) if m <= 0 else bnp(m, p) / m


def fq(a, p):
    return (a ** (p - 1) - 1) // p


def Q(n, p):
    return sum(fq(a, p) ** n for a in range(1, p))


def bar(p):
    s = p - 1
    d = {f"B{n}": bnpd(n * s, p) for n in range(1, 7)}
    for n in range(1, 5):
        d[f"B{n}_2"] = bnpd(n * s - 2, p)
    for n in range(1, 3):
        d[f"B{n}_4"] = bnpd(n * s - 4, p)
    return d


def omegas_thm1(p):
    b = bar(p)
    B1, B2, B3, B4, B5 = (b[f"B{i}"] for i in range(1, 6))
    B12, B22, B32, B14 = b["B1_2"], b["B2_2"], b["B3_2"], b["B1_4"]
    F = Fraction
    w = [
        (-5 * B1 + 10 * B2 - 10 * B3 + 5 * B4 - B5, 5),
        (-F(5, 2) * B1**2 + F(15, 2) * B2**2 + F(5, 2) * B3**2 + B1 * B4 - 9 * B2 * B3, 4),
        (-F(1, 2) * B1 * B2**2 - B1**2 * (F(5, 3) * B1 - F(5, 2) * B2 + F(1, 2) * B3) - B12 + B22 - F(1, 3) * B32, 3),
        (-F(5, 24) * B1**4 + F(1, 6) * B1**3 * B2 - F(2, 3) * B1 * B12 + F(1, 3) * B2 * B22, 2),
        (-F(1, 120) * B1**5 - F(1, 6) * B1**2 * B12 - F(1, 5) * B14, 1),
    ]
    return [emb(x, p**k) for x, k in w]


def row(name, value):
    print(f"{name:40s} {value}")


def main():
    row("7^6", 7**6)
    row("inv(6) mod 125", pow(6, -1, 125))
    row("721/7 mod 7^5", (721 // 7) % 7**5)
    row("1/6 mod 125", emb(Fraction(1, 6), 125))
    row("11/6 mod 49", emb(Fraction(11, 6), 49))
    row("B_2", B[2])
    row("B_12", B[12])
    row("S_1(5) mod 25", sum(v for v in range(1, 5)) % 25)
    row("S_0(7) mod 49", 6)
    row("S_6(7) mod 343", sum(v**6 for v in range(1, 7)) % 343)
    row("5*B_2 mod 125", emb(5 * B[2], 125))
    row("7*B_12 mod 343", emb(7 * B[12], 343))
    row("bnp(4) p=5 mod 5", emb(bnp(4, 5), 5))
    row("bnp(8) p=5 mod 25", emb(bnp(8, 5), 25))
    row("bnpd(4) p=7 mod 7", emb(bnpd(4, 7), 7))
    row("bnpd(8) p=7 mod 7", emb(bnpd(8, 7), 7))
    row("Bbar_1 p=7 (value)", bnpd(6, 7))
    row("Bbar_1 p=7 mod 49", emb(bnpd(6, 7), 49))
    row("bnpd(14) p=7 mod 7^3", emb(bnpd(14, 7), 343))
    row("q_5(2) mod 25", fq(2, 5) % 25)
    row("q_7(6) mod 49", fq(6, 7) % 49)
    row("Q_5(1) mod 25", Q(1, 5) % 25)
    row("Q_7(1) mod 7^5", Q(1, 7) % 7**5)
    row("Q_3(2) mod 3", Q(2, 3) % 3)
    row("Q_7(2) mod 49", Q(2, 7) % 49)
    row("Shat_4(5) mod 5", ((sum(v**4 for v in range(1, 5)) - 4) // 5) % 5)
    row("4! mod 25", factorial(4) % 25)
    row("6! mod 49", factorial(6) % 49)
    for p in (5, 7, 13):
        row(f"W_{p}", (factorial(p - 1) + 1) // p)
    row("W_11 mod 11^6", ((factorial(10) + 1) // 11) % 11**6)
    row("omega thm1 p=7", omegas_thm1(7))
    row("omega thm1 p=11", omegas_thm1(11))
    row("psi_3(1,1,1)", 6 - 6 + 1 + 3 - 3 + 2)
    # Binomial differences, straight from the definition.
    for k, n, p in ((5, 1, 7), (5, 3, 11), (3, 5, 7)):
        d = sum(comb(n, v) * (-1) ** (n - v) * comb(v * (p - 1), k) for v in range(n + 1))
        row(f"binom diff k={k} n={n} p={p}", d % p)
    primes = [n for n in range(2, 31) if all(n % d for d in range(2, n))]
    row("primes in [2,30]", len(primes))


if __name__ == "__main__":
    main()
