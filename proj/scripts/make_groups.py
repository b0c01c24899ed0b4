#!/usr/bin/env python3
"""Generates the stored generator files under data/.

Groups that are awkward to build from a family formula are produced here
once and checked by order; the C++ loader checks the order again.
"""
import itertools
import random
import re
import sys
from pathlib import Path

from sympy.combinatorics import Permutation, PermutationGroup

OUT = Path(__file__).resolve().parent.parent / "data"
rng = random.Random(20240611)


def write(name, degree, gens, order, note):
    path = OUT / f"{re.sub('[^A-Za-z0-9]+', '_', name).strip('_')}_{degree}.grp"
    with open(path, "w") as f:
        f.write(f"# {note}\n")
        f.write(f"name {name}\ndegree {degree}\norder {order}\n")
        for g in gens:
            f.write("gen " + ",".join(str(x + 1) for x in g) + "\n")
    print(f"wrote {path.name}: order {order}")


def group(gens):
    return PermutationGroup([Permutation(list(g)) for g in gens])


def cycles(text, n):
    img = list(range(n))
    for cyc in text.strip(")(").split(")("):
        pts = [int(x) - 1 for x in cyc.split(",")]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            img[a] = b
    return img


def closure(gens, cap):
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                h = tuple(g[x] for x in e)
                if h not in seen:
                    seen.add(h)
                    if len(seen) > cap:
                        return seen
                    nxt.append(h)
        frontier = nxt
    return seen


# ------------------------------------------------------------ Mathieu groups

def mathieu():
    a = cycles("(1,2,3,4,5,6,7,8,9,10,11)", 11)
    b = cycles("(3,7,11,8)(4,10,5,6)", 11)
    assert group([a, b]).order() == 7920
    write("M11", 11, [a, b], 7920, "Mathieu group M11 on 11 points")

    a12 = a + [11]
    b12 = b + [11]
    c12 = cycles("(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)", 12)
    assert group([a12, b12, c12]).order() == 95040
    write("M12", 12, [a12, b12, c12], 95040, "Mathieu group M12 on 12 points")

    # M11 on the 12 cosets of a subgroup PSL(2,11).
    elements = closure([tuple(a), tuple(b)], 10**5)
    assert len(elements) == 7920
    elements = sorted(elements)
    order11 = [e for e in elements if group([e]).order() == 11]
    invol = [e for e in elements if group([e]).order() == 2]
    h = None
    for _ in range(2000):
        x, t = rng.choice(order11), rng.choice(invol)
        sub = closure([x, t], 661)
        if len(sub) == 660:
            h = sub
            break
    assert h is not None
    cosets = []
    index = {}
    for e in elements:
        if e in index:
            continue
        coset = {tuple(e[x] for x in s) for s in h}  # the right coset He
        for c in coset:
            index[c] = len(cosets)
        cosets.append(min(coset))
    assert len(cosets) == 12
    gens12 = []
    for g in (a, b):
        # right multiplication Hx -> Hxg
        gens12.append([index[tuple(g[v] for v in rep)] for rep in cosets])
    assert group(gens12).order() == 7920 and group(gens12).is_transitive()
    write("M11", 12, gens12, 7920, "Mathieu group M11 on the cosets of PSL(2,11)")


# ------------------------------------------------------------ GF(2)^6 linear algebra

def vec(i, d):
    return tuple((i >> (d - 1 - j)) & 1 for j in range(d))


def vidx(v):
    r = 0
    for x in v:
        r = 2 * r + x
    return r


def mat_apply(m, v):  # row vector v times matrix m
    d = len(v)
    return tuple(sum(v[i] * m[i][j] for i in range(d)) % 2 for j in range(d))


def symp(x, y):  # x0y3 + x1y4 + x2y5 + (sym), coordinates (x0..x5)
    return (x[0] * y[3] + x[3] * y[0] + x[1] * y[4] + x[4] * y[1] + x[2] * y[5] + x[5] * y[2]) % 2


def transvection(v):
    d = 6
    rows = []
    for i in range(d):
        e = vec(1 << (d - 1 - i), d)
        img = tuple((e[j] + symp(e, v) * v[j]) % 2 for j in range(d))
        rows.append(img)
    return rows


def mat_mul(a, b):
    d = len(a)
    return [tuple(sum(a[i][k] * b[k][j] for k in range(d)) % 2 for j in range(d)) for i in range(d)]


def random_symplectic(steps=60):
    nonzero = [vec(i, 6) for i in range(1, 64)]
    m = [vec(1 << (5 - i), 6) for i in range(6)]
    for _ in range(steps):
        m = mat_mul(m, transvection(rng.choice(nonzero)))
    return m


def quadratic_forms():
    # Q0(x) = x0x3 + x1x4 + x2x5 polarizes to symp; every form with that
    # polarization is Q0 + symp(a, .).
    def q0(x):
        return (x[0] * x[3] + x[1] * x[4] + x[2] * x[5]) % 2
    vs = [vec(i, 6) for i in range(64)]
    forms = []
    for a in vs:
        forms.append(tuple((q0(x) + symp(a, x)) % 2 for x in vs))
    return vs, forms


def sp62():
    vs, forms = quadratic_forms()
    zeros = [sum(1 for t in f[1:] if t == 0) for f in forms]
    plus = [f for f, z in zip(forms, zeros) if z == 35]
    minus = [f for f, z in zip(forms, zeros) if z == 27]
    assert len(plus) == 36 and len(minus) == 28
    mats = [random_symplectic() for _ in range(2)]

    def action(m, family):
        pos = {f: i for i, f in enumerate(family)}
        inv_img = {}
        for x in vs:
            inv_img[mat_apply(m, x)] = x
        # (Q^g)(x) = Q(x g^-1)
        return [pos[tuple(f[vidx(inv_img[x])] for x in vs)] for f in family]

    for family, deg in ((minus, 28), (plus, 36)):
        while True:
            gens = [action(m, family) for m in mats]
            if group(gens).order() == 1451520:
                break
            mats = [random_symplectic() for _ in range(2)]
        write("Sp(6,2)", deg, gens, 1451520, f"Sp(6,2) on the {deg} quadratic forms of one type")


# ------------------------------------------------------------ 2^6:G2(2)

def octonion_mul(x, y):
    # Zorn vector matrices over GF(2), so all signs drop out.
    def cross(u, v):
        return ((u[1] * v[2] + u[2] * v[1]) % 2, (u[2] * v[0] + u[0] * v[2]) % 2,
                (u[0] * v[1] + u[1] * v[0]) % 2)

    def dot(u, v):
        return sum(p * q for p, q in zip(u, v)) % 2

    def lin(s, u, t, v):
        return tuple((s * p + t * q) % 2 for p, q in zip(u, v))
    a, u, v, b = x
    c, w, z, d = y
    return ((a * c + dot(u, z)) % 2, tuple((p + q) % 2 for p, q in zip(lin(a, w, d, u), cross(v, z))),
            tuple((p + q) % 2 for p, q in zip(lin(c, v, b, z), cross(u, w))), (b * d + dot(v, w)) % 2)


def hexagon_lines():
    # Generalized hexagon of order 2: points are the null trace-zero split
    # octonions, lines the triples {x, y, x + y} with xy = 0. Projecting
    # away the identity leaves (u, v) in GF(2)^6 with symp as polarity.
    zero = (0, (0, 0, 0), (0, 0, 0), 0)
    cube = list(itertools.product((0, 1), repeat=3))
    pts = []
    for u in cube:
        for v in cube:
            a = sum(p * q for p, q in zip(u, v)) % 2  # forced by a = b and norm 0
            if u != (0, 0, 0) or v != (0, 0, 0):
                pts.append((a, u, v, a))
    assert len(pts) == 63

    def proj(x):
        return x[1] + x[2]
    lines = set()
    for x, y in itertools.combinations(pts, 2):
        if octonion_mul(x, y) == zero:
            z = tuple(p ^ q for p, q in zip(proj(x), proj(y)))
            lines.add(frozenset((proj(x), proj(y), z)))
    assert len(lines) == 63, len(lines)
    return lines


def g2_affine():
    lines = hexagon_lines()
    for line in lines:
        for x, y in itertools.combinations(line, 2):
            assert symp(x, y) == 0

    def preserves(m):
        return all(frozenset(mat_apply(m, p) for p in line) in lines for line in lines)

    found = []
    while len(found) < 4:
        m = random_symplectic()
        if preserves(m):
            found.append(m)
    linear = [[vidx(mat_apply(m, vec(i, 6))) for i in range(64)] for m in found]
    g2 = group(linear)
    while g2.order() != 12096:
        m = random_symplectic()
        if preserves(m):
            found.append(m)
            linear.append([vidx(mat_apply(m, vec(i, 6))) for i in range(64)])
            g2 = group(linear)
    translations = [[i ^ 1 for i in range(64)]]  # the linear part is transitive on nonzero vectors
    h = group(translations + two_generators(g2))
    assert h.order() == 64 * 12096
    write("2^6:G2(2)", 64, [list(x.array_form) for x in h.generators], 64 * 12096,
          "affine group with linear part the stabilizer in Sp(6,2) of a generalized hexagon")

    derived = g2.derived_subgroup()
    assert derived.order() == 6048
    sub = group(translations + two_generators(derived))
    assert sub.order() == 64 * 6048
    write("2^6:U3(3)", 64, [list(x.array_form) for x in sub.generators], 64 * 6048,
          "index-2 subgroup of 2^6:G2(2)")


def two_generators(g):
    target = g.order()
    while True:
        a, b = g.random(), g.random()
        if group([a.array_form, b.array_form]).order() == target:
            return [a.array_form, b.array_form]


def golay_octads():
    q = {(i * i) % 23 for i in range(1, 23)}
    row = [1 if i == 0 or i in q else 0 for i in range(23)]
    rows = [[row[(i - s) % 23] for i in range(23)] for s in range(23)]
    rows = [r + [sum(r) % 2] for r in rows] + [[1] * 24]
    basis = []
    for r in rows:
        x = int("".join(map(str, r)), 2)
        for b in basis:
            x = min(x, x ^ b)
        if x:
            basis.append(x)
    assert len(basis) == 12
    words = [0]
    for b in basis:
        words += [w ^ b for w in words]
    octads = [frozenset(i for i in range(24) if (w >> (23 - i)) & 1)
              for w in words if bin(w).count("1") == 8]
    assert len(octads) == 759
    return octads


def higman_sims():
    # Higman's symmetric 2-(176,50,14) design: points are the octads through
    # 23 but not 22, blocks those through 22 but not 23, incidence when the
    # two meet in 0 or 4 points. Its automorphism group is HS.
    import pynauty

    octads = golay_octads()
    points = [o for o in octads if 23 in o and 22 not in o]
    blocks = [o for o in octads if 22 in o and 23 not in o]
    incidence = {i: [] for i in range(352)}
    for j, b in enumerate(blocks):
        members = [i for i, p in enumerate(points) if len(p & b) in (0, 4)]
        assert len(members) == 50
        for i in members:
            incidence[i].append(176 + j)
    graph = pynauty.Graph(352, adjacency_dict=incidence,
                          vertex_coloring=[set(range(176)), set(range(176, 352))])
    gens = [list(g[:176]) for g in pynauty.autgrp(graph)[0]]
    order = 2**9 * 3**2 * 5**3 * 7 * 11
    g = group(gens)
    assert g.order() == order
    write("HS", 176, two_generators(g), order,
          "automorphism group of Higman's 2-(176,50,14) design built from the Golay code")


if __name__ == "__main__":
    OUT.mkdir(exist_ok=True)
    which = set(sys.argv[1:]) or {"mathieu", "sp62", "g2"}
    if "mathieu" in which:
        mathieu()
    if "sp62" in which:
        sp62()
    if "g2" in which:
        g2_affine()
    if "hs" in which:
        higman_sims()
