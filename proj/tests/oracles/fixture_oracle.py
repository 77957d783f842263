"""Independent high-precision oracle for fixture values.

Uses mpmath floats at 80 digits with a 1e-50 equality tolerance. Nothing here
shares code with the C++ library; the numbers it prints are frozen into the
C++ unit tests.
"""
import itertools
import math
import mpmath as mp

mp.mp.dps = 80
EPS = mp.mpf(10) ** -50


def eq(a, b):
    return abs(a - b) < EPS


class PL:
    def __init__(self, L, tL, R, tR, c):
        self.L, self.tL, self.R, self.tR, self.c = L, tL, R, tR, c

    def left(self, x):
        return self.L * x + self.tL

    def right(self, x):
        return self.R * x + self.tR

    # sided orbit of c_+ / c_- as (value, side) with side in {-1,0,1}
    def sided_orbit(self, start_side, steps):
        pts = [(self.c, start_side)]
        x = mp.mpf(0) if start_side > 0 else mp.mpf(1)
        pending = []
        vals = [x]
        for _ in range(steps):
            y = vals[-1]
            if eq(y, self.c):
                vals.append(mp.mpf(0) if start_side > 0 else mp.mpf(1))
                # c reached: the side of c is start_side inherited along chain
                continue
            vals.append(self.left(y) if y < self.c else self.right(y))
        return vals


def mod_one(beta, alpha):
    return PL(beta, alpha, beta, alpha - 1, (1 - alpha) / beta)


def plain_orbit(m, x, steps, side):
    # follow one-sided limits: at c use side (+ -> 0, - -> 1) and keep that side
    out = [x]
    for _ in range(steps):
        y = out[-1]
        if eq(y, m.c):
            out.append(mp.mpf(0) if side > 0 else mp.mpf(1))
        elif y < m.c:
            out.append(m.left(y))
        else:
            out.append(m.right(y))
    return out


def crit_orbit(m, side, steps):
    return [m.c] + plain_orbit(m, mp.mpf(0) if side > 0 else mp.mpf(1), steps - 1, side)


def hitting_time(m, a, b, bound=400):
    for n in range(bound):
        if a < m.c - EPS and b > m.c + EPS:
            return n
        if b <= m.c + EPS:
            a, b = m.left(a), m.left(b)
        else:
            a, b = m.right(a), m.right(b)
    return None


def lap_count(m, n):
    pieces = [(mp.mpf(0), m.c, m.L, m.tL), (m.c, mp.mpf(1), m.R, m.tR)]
    for _ in range(n - 1):
        nxt = []
        for lo, hi, s, t in pieces:
            ylo, yhi = s * lo + t, s * hi + t
            if ylo < m.c - EPS and yhi > m.c + EPS:
                xs = (m.c - t) / s
                nxt.append((lo, xs, m.L * s, m.L * t + m.tL))
                nxt.append((xs, hi, m.R * s, m.R * t + m.tR))
            elif yhi <= m.c + EPS:
                nxt.append((lo, hi, m.L * s, m.L * t + m.tL))
            else:
                nxt.append((lo, hi, m.R * s, m.R * t + m.tR))
        pieces = nxt
    return pieces


def validate(m, l, r):
    """Brute-force renormalization check on interval endpoints (limits)."""
    co_p = crit_orbit(m, +1, r + 1)
    co_m = crit_orbit(m, -1, l + 1)
    u, v = co_p[r], co_m[l]
    if not (u < m.c - EPS and v > m.c + EPS):
        return False
    if not (u > EPS or v < 1 - EPS):
        return False
    # continuity: iterate (u,c) l times, (c,v) r times without c inside
    a, b = u, m.c
    for i in range(l):
        if a < m.c - EPS and b > m.c + EPS:
            return False
        if b <= m.c + EPS:
            a, b = m.left(a), (m.left(b) if not eq(b, m.c) else mp.mpf(1))
        else:
            a, b = (m.right(a) if not eq(a, m.c) else mp.mpf(0)), m.right(b)
    gu = a
    a, b = m.c, v
    for i in range(r):
        if a < m.c - EPS and b > m.c + EPS:
            return False
        if b <= m.c + EPS:
            a, b = m.left(a), (m.left(b) if not eq(b, m.c) else mp.mpf(1))
        else:
            a, b = (m.right(a) if not eq(a, m.c) else mp.mpf(0)), m.right(b)
    gv = b
    if gu < u - EPS or gv > v + EPS:
        return False
    return gu < gv


def preimages_value(m, y):
    out = []
    f0, f1 = m.tL, m.R + m.tR
    if f0 < y - EPS and y < 1 - EPS:
        out.append((y - m.tL) / m.L)
    if y > EPS and y < f1 - EPS:
        out.append((y - m.tR) / m.R)
    return out


def lemma_m(m, bound=20):
    f0, f1 = m.tL, m.R + m.tR
    level = [m.c]
    for i in range(bound + 1):
        if any(f0 - EPS <= z <= f1 + EPS for z in level):
            return i
        nxt = []
        for z in level:
            nxt += preimages_value(m, z)
        level = nxt
    return None


def main():
    print("root x^8-2:", mp.nstr(mp.mpf(2) ** (mp.mpf(1) / 8), 15))

    # 51from4
    b = mp.findroot(lambda x: x ** 4 - x - 1, 1.22)
    m51 = mod_one(b, 1 - 1 / b)
    print("51 beta", mp.nstr(b, 15), "c", mp.nstr(m51.c, 12))
    print("51 laps n=2:", len(lap_count(m51, 2)))
    f1 = m51.R + m51.tR
    print("51 N((f(1),c)):", hitting_time(m51, f1, m51.c))
    cm, cp = crit_orbit(m51, -1, 30), crit_orbit(m51, +1, 30)
    print("51 matching eta:", next(e for e in range(1, 30) if eq(cm[e], cp[e])))
    print("51 lemma m:", lemma_m(m51))
    print("51 renorms (<=8):", [(l, r) for l in range(2, 9) for r in range(2, 9) if validate(m51, l, r)])

    # ex5_2
    th = mp.mpf(2) ** (mp.mpf(1) / 5)
    beta, alpha = 9 * th / 10, th / 3
    m52 = mod_one(beta, alpha)
    a0 = beta ** 4 * alpha + beta ** 3 * alpha + beta ** 2 * alpha + beta * alpha - beta ** 2 + alpha - 1
    z0 = a0 / (1 - beta ** 5)
    orb = plain_orbit(m52, z0, 5, 0)
    print("52 z0", mp.nstr(z0, 12), "returns:", eq(orb[5], z0), "sorted:", [mp.nstr(x, 8) for x in sorted(orb[:5])])
    zs = sorted(orb[:5])
    print("52 N((z2,c))", hitting_time(m52, zs[2], m52.c), "N((c,z3))", hitting_time(m52, m52.c, zs[3]))
    print("52 lemma m:", lemma_m(m52))
    print("52 renorms (<=5):", [(l, r) for l in range(2, 6) for r in range(2, 6) if validate(m52, l, r)])
    print("52 renorms (<=10):", [(l, r) for l in range(2, 11) for r in range(2, 11) if validate(m52, l, r)])
    # ex3
    b3 = mp.findroot(lambda x: x ** 8 - x ** 2 - 1, 1.1)
    a3 = (1 - b3 + b3 ** 3) / (b3 ** 3 + b3 ** 4)
    m3 = mod_one(b3, a3)
    print("ex3 beta", mp.nstr(b3, 12), "alpha", mp.nstr(a3, 10), "c", mp.nstr(m3.c, 10))
    print("ex3 renorms (<=8):", [(l, r) for l in range(2, 9) for r in range(2, 9) if validate(m3, l, r)])
    print("ex3 lemma m:", lemma_m(m3))
    # ex4
    b4 = mp.mpf(2) ** (mp.mpf(1) / 8)
    m4 = mod_one(b4, (2 - b4) / 2)
    print("ex4 renorms (<=8):", [(l, r) for l in range(2, 9) for r in range(2, 9) if validate(m4, l, r)])
    print("ex4 renorms (<=16):", [(l, r) for l in range(2, 17) for r in range(2, 17) if validate(m4, l, r)])
    # cube root 2
    bc = mp.mpf(2) ** (mp.mpf(1) / 3)
    mc = mod_one(bc, 1 / (bc + bc ** 2))
    print("cbrt2 renorms (<=8):", [(l, r) for l in range(2, 9) for r in range(2, 9) if validate(mc, l, r)])
    print("cbrt2 lemma m:", lemma_m(mc))
    # OandD
    s7 = mp.sqrt(7)
    a, bb, c = 1 + s7, (s7 - 1) / 3, mp.mpf(1) / 4
    mo = PL(a, 1 - a * c, bb, -bb * c, c)
    print("OandD renorms (<=8):", [(l, r) for l in range(2, 9) for r in range(2, 9) if validate(mo, l, r)])
    print("OandD lemma m:", lemma_m(mo))


if __name__ == "__main__":
    main()
