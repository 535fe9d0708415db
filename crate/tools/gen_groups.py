"""Generates crates/cherednik/groups/*.json (generators + character tables).

Scalars live in Q(zeta_n); stored as rational coefficient vectors over the
power basis 1, z, ..., z^(phi(n)-1). Character values are written as strings
understood by the library's scalar parser.
"""
import json
import os
import sys
from fractions import Fraction
from math import gcd

OUT = os.path.join(os.path.dirname(__file__), "..", "crates", "cherednik", "groups")


def cyclotomic(n):
    # coefficients low->high
    x_n_minus_1 = [-1] + [0] * (n - 1) + [1]
    p = x_n_minus_1
    for d in range(1, n):
        if n % d == 0:
            p = pdiv(p, cyclotomic(d))
    return p


def pdiv(a, b):
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = Fraction(a[i + len(b) - 1], b[-1])
        q[i] = c
        for j in range(len(b)):
            a[i + j] -= c * b[j]
    return [int(x) for x in q]


class K:
    """Element of Q(zeta_n), canonical power-basis coefficients."""

    def __init__(self, n, c):
        self.n = n
        phi = cyclotomic(n)
        c = [Fraction(x) for x in c]
        d = len(phi) - 1
        for i in range(len(c) - 1, d - 1, -1):
            f = c[i]
            if f:
                for j in range(len(phi)):
                    c[i - d + j] -= f * phi[j]
        c = c[:d] + [Fraction(0)] * max(0, d - len(c))
        self.c = tuple(c)

    @staticmethod
    def zeta(n, k):
        c = [0] * n
        c[k % n] = 1
        return K(n, c)

    @staticmethod
    def rat(n, r):
        return K(n, [r])

    def __add__(s, o):
        return K(s.n, [a + b for a, b in zip(s.c, o.c)])

    def __sub__(s, o):
        return K(s.n, [a - b for a, b in zip(s.c, o.c)])

    def __neg__(s):
        return K(s.n, [-a for a in s.c])

    def __mul__(s, o):
        r = [Fraction(0)] * (2 * len(s.c))
        for i, a in enumerate(s.c):
            if a:
                for j, b in enumerate(o.c):
                    r[i + j] += a * b
        return K(s.n, r)

    def __eq__(s, o):
        return s.c == o.c

    def __hash__(s):
        return hash(s.c)

    def is_zero(s):
        return not any(s.c)

    def to_str(s):
        out = ""
        for i, a in enumerate(s.c):
            if a == 0:
                continue
            sign = "-" if a < 0 else ("+" if out else "")
            a = abs(a)
            if i == 0:
                out += f"{sign}{a}"
                continue
            z = "E(%d)" % s.n if i == 1 else "E(%d)^%d" % (s.n, i)
            out += f"{sign}{z}" if a == 1 else f"{sign}{a}*{z}"
        return out or "0"

    def vec(s):
        return [str(a) for a in s.c]


def mat_mul(a, b):
    m = len(a)
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(m)), K.rat(a[0][0].n, 0)) for j in range(m))
        for i in range(m)
    )


def enumerate_group(gens):
    m = len(gens[0])
    n = gens[0][0][0].n
    one = tuple(tuple(K.rat(n, 1 if i == j else 0) for j in range(m)) for i in range(m))
    elems = [one]
    words = {one: []}
    i = 0
    while i < len(elems):
        g = elems[i]
        for k, s in enumerate(gens):
            h = mat_mul(g, s)
            if h not in words:
                words[h] = words[g] + [k]
                elems.append(h)
        i += 1
    return elems, words


def inverse(elems, g):
    one = elems[0]
    for h in elems:
        if mat_mul(g, h) == one:
            return h
    raise ValueError


def classes(elems):
    inv = {g: inverse(elems, g) for g in elems}
    seen = set()
    out = []
    for g in elems:
        if g in seen:
            continue
        cl = []
        for h in elems:
            c = mat_mul(mat_mul(inv[h], g), h)
            if c not in seen:
                seen.add(c)
                cl.append(c)
        out.append(cl)
    return out


def trace(g):
    t = g[0][0]
    for i in range(1, len(g)):
        t = t + g[i][i]
    return t


def det2(g):
    if len(g) == 1:
        return g[0][0]
    return g[0][0] * g[1][1] - g[0][1] * g[1][0]


def write(name, n, gens, chars, elems, words, cls, extra=None):
    reps = [cl[0] for cl in cls]
    table = [[chi(r).to_str() for r in reps] for chi in chars]
    doc = {
        "name": name,
        "dim": len(gens[0]),
        "conductor": n,
        "generators": [[[e.vec() for e in row] for row in g] for g in gens],
        "class_representatives": [words[r] for r in reps],
        "character_table": table,
    }
    if extra:
        doc.update(extra)
    check(n, chars, cls, len(elems))
    with open(os.path.join(OUT, name + ".json"), "w") as f:
        json.dump(doc, f, indent=1)
        f.write("\n")


def conj(x):
    # complex conjugation on power-basis coefficients
    n = x.n
    c = [Fraction(0)] * n
    for i, a in enumerate(x.c):
        c[(-i) % n] += a
    return K(n, c)


def check(n, chars, cls, order):
    for a in chars:
        for b in chars:
            s = K.rat(n, 0)
            for cl in cls:
                s = s + K.rat(n, len(cl)) * a(cl[0]) * conj(b(cl[0]))
            want = K.rat(n, order if a is b else 0)
            assert s == want, "orthogonality"
    assert len(chars) == len(cls)


def mu(n):
    z = K.zeta(n, 1)
    gens = [((z,),)]
    elems, words = enumerate_group(gens)
    cls = classes(elems)
    chars = []
    for j in range(n):
        chars.append(lambda g, j=j: pw(g[0][0], j))
    write("mu%d" % n, n, gens, chars, elems, words, cls)


def pw(x, j):
    r = K.rat(x.n, 1)
    for _ in range(j):
        r = r * x
    return r


def dihedral(d):
    # G(d,d,2)
    n = d if d > 2 else 1
    n = n if n % 4 != 2 else n // 2  # Q(zeta_d) = Q(zeta_{d/2}) for d = 2 mod 4
    z = K.zeta(d, 1)
    z = K(n, lift(z, d, n))
    zi = K(n, lift(K.zeta(d, -1), d, n))
    o, l = K.rat(n, 0), K.rat(n, 1)
    s1 = ((o, l), (l, o))
    s2 = ((o, z), (zi, o))
    gens = [s1, s2]
    elems, words = enumerate_group(gens)
    cls = classes(elems)

    def is_rot(g):
        return g[0][1].is_zero()

    def rot_index(g):
        # exponent k with g = diag(z^k, z^-k) or antidiag(z^k, z^-k)
        v = g[0][0] if is_rot(g) else g[0][1]
        for k in range(d):
            if K(n, lift(K.zeta(d, k), d, n)) == v:
                return k
        raise ValueError

    chars = [lambda g: l, lambda g: l if is_rot(g) else -l]
    if d % 2 == 0:
        chars.append(lambda g: l if rot_index(g) % 2 == 0 else -l)
        chars.append(lambda g: (l if rot_index(g) % 2 == 0 else -l) * (l if is_rot(g) else -l))
    for j in range(1, (d - 1) // 2 + 1):
        def ch(g, j=j):
            if not is_rot(g):
                return o
            k = rot_index(g)
            return K(n, lift(K.zeta(d, j * k), d, n)) + K(n, lift(K.zeta(d, -j * k), d, n))
        chars.append(ch)
    write("dih%d" % (2 * d), n, gens, chars, elems, words, cls)


def lift(x, d, n):
    """Rewrites an element of Q(zeta_d) as group-ring coefficients over zeta_n.

    Only needed when d = 2 mod 4, where zeta_d = -zeta_n^((n+1)/2)."""
    if n == d:
        return list(x.c)
    out = [Fraction(0)] * max(n, 1)
    if n == 1:
        # d = 2: zeta_2 = -1
        for i, a in enumerate(x.c):
            out[0] += a * (-1) ** i
        return out
    h = (n + 1) // 2
    for i, a in enumerate(x.c):
        # zeta_d^i = (-1)^i zeta_n^(h i)
        out[(h * i) % n] += a * (-1) ** i
    return out


def b2():
    n = 1
    o, l = K.rat(n, 0), K.rat(n, 1)
    t = ((-l, o), (o, l))
    s = ((o, l), (l, o))
    gens = [t, s]
    elems, words = enumerate_group(gens)
    cls = classes(elems)

    def diag(g):
        return g[0][1].is_zero()

    chars = [
        lambda g: l,
        lambda g: det2(g),
        lambda g: l if diag(g) else -l,
        lambda g: det2(g) * (l if diag(g) else -l),
        lambda g: trace(g),
    ]
    write("B2", n, gens, chars, elems, words, cls)


def g4():
    n = 3
    z = K.zeta(3, 1)
    o, l = K.rat(n, 0), K.rat(n, 1)
    th = K.rat(n, Fraction(1, 3))
    s = ((l, o), (o, z))
    t = (
        (th * (K.rat(n, 2) * z + l), th * K.rat(n, 2) * (z - l)),
        (th * (z - l), th * (z + K.rat(n, 2))),
    )
    gens = [s, t]
    elems, words = enumerate_group(gens)
    assert len(elems) == 24
    cls = classes(elems)
    sq = {g: mat_mul(g, g) for g in elems}

    def d(g, k):
        return pw(det2(g), k)

    def sym2(g):
        a = trace(g)
        return (a * a + trace(sq[g])) * K.rat(n, Fraction(1, 2))

    chars = [lambda g: l, lambda g: d(g, 1), lambda g: d(g, 2)]
    for k in range(3):
        chars.append(lambda g, k=k: trace(g) * d(g, k))
    three = None
    for k in range(3):
        cand = lambda g, k=k: sym2(g) * d(g, k)
        nrm = K.rat(n, 0)
        for cl in cls:
            v = cand(cl[0])
            nrm = nrm + K.rat(n, len(cl)) * v * conj(v)
        if nrm == K.rat(n, 24):
            three = cand
            break
    chars.append(three)
    write("G4", n, gens, chars, elems, words, cls)


if __name__ == "__main__":
    os.makedirs(OUT, exist_ok=True)
    for k in range(2, 13):
        mu(k)
    for d in range(3, 9):
        dihedral(d)
    b2()
    g4()
    print("ok")
