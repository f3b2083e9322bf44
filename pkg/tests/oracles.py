"""Independent exact oracles used by the test-suite (integer 2-D geometry)."""

from itertools import combinations


def orient(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def on_segment(p, a, b):
    return (orient(a, b, p) == 0 and min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def segments_meet(a, b, c, d):
    d1, d2 = orient(c, d, a), orient(c, d, b)
    d3, d4 = orient(a, b, c), orient(a, b, d)
    if ((d1 > 0 > d2) or (d1 < 0 < d2)) and ((d3 > 0 > d4) or (d3 < 0 < d4)):
        return True
    return on_segment(a, c, d) or on_segment(b, c, d) or on_segment(c, a, b) or on_segment(d, a, b)


def in_triangle(p, a, b, c):
    s = [orient(a, b, p), orient(b, c, p), orient(c, a, p)]
    if orient(a, b, c) == 0:
        return on_segment(p, a, b) or on_segment(p, b, c) or on_segment(p, a, c)
    return all(v >= 0 for v in s) or all(v <= 0 for v in s)


def in_hull(p, P):
    if len(P) == 1:
        return tuple(p) == tuple(P[0])
    if len(P) == 2:
        return on_segment(p, P[0], P[1])
    return any(in_triangle(p, *t) for t in combinations(P, 3))


def hulls_meet_2d(A, B):
    """Exact answer for integer point lists in the plane."""
    A = [tuple(map(int, p)) for p in A]
    B = [tuple(map(int, p)) for p in B]
    if any(in_hull(p, B) for p in A) or any(in_hull(p, A) for p in B):
        return True
    ea = list(combinations(A, 2)) if len(A) > 1 else []
    eb = list(combinations(B, 2)) if len(B) > 1 else []
    return any(segments_meet(*s, *t) for s in ea for t in eb)


def separable_2d(pos, neg):
    """Two finite classes are strictly linearly separable iff their hulls are disjoint."""
    return not hulls_meet_2d(pos, neg)
