"""Small named semigroups and monoids used by tests, demos, and benchmarks."""

from __future__ import annotations

from .algebra.core import FiniteSemigroup, direct_product


def u1():
    """Multiplicative {1, 0}: logical AND."""
    return FiniteSemigroup([[0, 1], [1, 1]], names=["1", "0"])


def u2():
    """{1, a, b} with xy = y for x, y non-neutral."""
    return FiniteSemigroup(
        [[0, 1, 2], [1, 1, 2], [2, 1, 2]], names=["1", "a", "b"]
    )


def cyclic(d):
    """Z_d, the cyclic group of order d, written additively."""
    table = [[(x + y) % d for y in range(d)] for x in range(d)]
    return FiniteSemigroup(table, names=[str(x) for x in range(d)])


def s3():
    """Symmetric group on 3 points, as a transformation table."""
    perms = [
        (0, 1, 2), (1, 2, 0), (2, 0, 1),  # rotations
        (1, 0, 2), (0, 2, 1), (2, 1, 0),  # transpositions
    ]
    index = {p: i for i, p in enumerate(perms)}
    # composition: apply p first, then q
    table = [
        [index[tuple(q[p[k]] for k in range(3))] for q in perms] for p in perms
    ]
    names = ["e", "r", "rr", "s01", "s12", "s02"]
    return FiniteSemigroup(table, names=names)


def ab_star_semigroup():
    """Syntactic semigroup {a, b, ab, 0} of a*b*: a2=a, b2=b, ba=0."""
    a, b, ab, z = 0, 1, 2, 3
    t = [[None] * 4 for _ in range(4)]
    t[a][a] = a
    t[a][b] = ab
    t[a][ab] = ab
    t[b][b] = b
    t[b][a] = z
    t[b][ab] = z
    t[ab][a] = z
    t[ab][b] = ab
    t[ab][ab] = z
    for x in range(4):
        t[x][z] = z
        t[z][x] = z
    return FiniteSemigroup(t, names=["a", "b", "ab", "0"])


def zg_monoid5():
    """{1, a, b, ab, 0} with a2 = b2 = ba = 0: nilpotent part plus identity."""
    one, a, b, ab, z = 0, 1, 2, 3, 4
    t = [[None] * 5 for _ in range(5)]
    for x in range(5):
        t[one][x] = x
        t[x][one] = x
        t[x][z] = z
        t[z][x] = z
    t[a][a] = z
    t[a][b] = ab
    t[b][a] = z
    t[b][b] = z
    t[a][ab] = z
    t[ab][a] = z
    t[b][ab] = z
    t[ab][b] = z
    t[ab][ab] = z
    return FiniteSemigroup(t, names=["1", "a", "b", "ab", "0"])


def a_squared_zero():
    """{1, a, 0} with a2 = 0."""
    return FiniteSemigroup(
        [[0, 1, 2], [1, 2, 2], [2, 2, 2]], names=["1", "a", "0"]
    )


def nilpotent_noncommutative():
    """{p, q, pq, qp, 0} with all length-3 products zero, plus an identity."""
    one, p, q, pq, qp, z = 0, 1, 2, 3, 4, 5
    t = [[z] * 6 for _ in range(6)]
    for x in range(6):
        t[one][x] = x
        t[x][one] = x
    t[p][q] = pq
    t[q][p] = qp
    return FiniteSemigroup(t, names=["1", "p", "q", "pq", "qp", "0"])


def gallery():
    """The acceptance-test gallery, keyed by name."""
    g = {
        "U1": u1(),
        "U2": u2(),
        "Z2": cyclic(2),
        "Z3": cyclic(3),
        "Z4": cyclic(4),
        "Z5": cyclic(5),
        "Z6": cyclic(6),
        "S3": s3(),
        "abstar": ab_star_semigroup(),
        "zg5": zg_monoid5(),
        "asq0": a_squared_zero(),
        "nilnc": nilpotent_noncommutative(),
    }
    g["U1xZ3"] = direct_product(g["U1"], g["Z3"])
    g["Z2xzg5"] = direct_product(g["Z2"], g["zg5"])
    return g
