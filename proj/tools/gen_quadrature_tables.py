"""Generate symmetric triangle quadrature tables (barycentric, weights sum to 1).

Low degrees (1-5): classical minimal symmetric rules, exact closed forms
polished to 40 digits. Degrees 6..21: S3-symmetrized conical-product
Gauss-Legendre x Gauss-Jacobi(alpha=1) rules of degree 2n-1, n=4..11.

Every rule is certified here against exact monomial moments
  int_T x^a y^b = a! b! / (a+b+2)!   (reference triangle (0,0),(1,0),(0,1))
to 1e-30 before emission.
"""
import mpmath as mp
from mpmath import mpf
import numpy as np
from scipy.special import roots_jacobi
import sympy as sp

mp.mp.dps = 50

def polish_gl(n):
    """Gauss-Legendre nodes/weights on [0,1], 50-digit."""
    xs, ws = np.polynomial.legendre.leggauss(n)
    nodes, weights = [], []
    for x0 in xs:
        f = lambda t: mp.legendre(n, t)
        x = mp.findroot(f, mpf(x0))
        dp = mp.diff(f, x)
        w = 2 / ((1 - x**2) * dp**2)
        nodes.append((x + 1) / 2)
        weights.append(w / 2)
    return nodes, weights

def polish_gj(n):
    """Gauss-Jacobi (alpha=1, beta=0) on [0,1] with weight (1-t); weights sum to 1/2."""
    xs, ws = roots_jacobi(n, 1.0, 0.0)
    nodes = []
    for x0 in xs:
        f = lambda t: mp.jacobi(n, 1, 0, t)
        x = mp.findroot(f, mpf(x0))
        nodes.append((x + 1) / 2)
    # moment-fit weights at high precision: int_0^1 t^k (1-t) dt = 1/((k+1)(k+2))
    A = mp.matrix(n, n)
    b = mp.matrix(n, 1)
    for k in range(n):
        for j in range(n):
            A[k, j] = nodes[j] ** k
        b[k] = mpf(1) / ((k + 1) * (k + 2))
    w = mp.lu_solve(A, b)
    return nodes, [w[i] for i in range(n)]

def conical_rule(n):
    """Points/weights on reference triangle, exact for total degree <= 2n-1.
    Returned weights are normalized so they sum to 1 (area-relative)."""
    gx, gw = polish_gl(n)
    hy, hw = polish_gj(n)
    pts, wts = [], []
    for i in range(n):
        for j in range(n):
            x = gx[i] * (1 - hy[j])
            y = hy[j]
            w = gw[i] * hw[j]      # cartesian weight; sums to 1/2
            pts.append((x, y))
            wts.append(2 * w)      # relative to area 1/2
    return pts, wts

def symmetrize(pts, wts):
    """C3-symmetrize barycentric points; merge coincident points."""
    out = {}
    for (x, y), w in zip(pts, wts):
        l = (1 - x - y, x, y)
        for rot in ((0, 1, 2), (2, 0, 1), (1, 2, 0)):
            lam = (l[rot[0]], l[rot[1]], l[rot[2]])
            key = tuple(mp.nstr(v, 33) for v in lam)
            out[key] = (lam, out.get(key, (lam, mpf(0)))[1] + w / 3)
    lams = [v[0] for v in out.values()]
    ws = [v[1] for v in out.values()]
    return lams, ws

def verify(lams, ws, degree):
    """Max relative error over monomials x^a y^b, a+b <= degree."""
    worst = mpf(0)
    for a in range(degree + 1):
        for b in range(degree + 1 - a):
            exact = mpf(mp.factorial(a) * mp.factorial(b)) / mp.factorial(a + b + 2)
            # int = area * sum w * f;  area_ref = 1/2, x = lam2, y = lam3
            acc = sum(w * (l[1] ** a) * (l[2] ** b) for l, w in zip(lams, ws))
            approx = acc / 2
            err = abs(approx - exact) / abs(exact)
            worst = max(worst, err)
    return worst

def check_invariants(lams, ws):
    for l in lams:
        assert abs(sum(l) - 1) < mpf('1e-45'), "bary sum"
    assert abs(sum(ws) - 1) < mpf('1e-44'), f"weight sum {sum(ws)}"

rules = {}   # degree -> (lams, ws)

# degree 1: centroid
third = mpf(1) / 3
rules[1] = ([(third, third, third)], [mpf(1)])

# degree 2: perm(2/3, 1/6, 1/6), w = 1/3
a, b = mpf(2) / 3, mpf(1) / 6
rules[2] = ([(a, b, b), (b, a, b), (b, b, a)], [third, third, third])

# degree 3: centroid -9/16 + perm(3/5, 1/5, 1/5) w 25/48
a, b = mpf(3) / 5, mpf(1) / 5
rules[3] = ([(third, third, third), (a, b, b), (b, a, b), (b, b, a)],
            [mpf(-9) / 16, mpf(25) / 48, mpf(25) / 48, mpf(25) / 48])

# degree 4: two edge orbits, solve moment system exactly with sympy
aa, bb, w1, w2 = sp.symbols('aa bb w1 w2', positive=True)
def orbit_powsum(t, k):
    c = 1 - 2 * t
    return 2 * t**k + c**k
# moments of lam1^k over ref triangle / area: 2*k!/(k+2)! -> k=2: 1/6, k=3: 1/10, k=4: 1/15;
# each orbit point evaluates the symmetric integrand sum_i lam_i^k to 2a^k + (1-2a)^k
eqs = [
    sp.Eq(3 * w1 + 3 * w2, 1),
    sp.Eq(3 * w1 * orbit_powsum(aa, 2) + 3 * w2 * orbit_powsum(bb, 2), sp.Rational(1, 6) * 3),
    sp.Eq(3 * w1 * orbit_powsum(aa, 3) + 3 * w2 * orbit_powsum(bb, 3), sp.Rational(1, 10) * 3),
    sp.Eq(3 * w1 * orbit_powsum(aa, 4) + 3 * w2 * orbit_powsum(bb, 4), sp.Rational(1, 15) * 3),
]
sols = sp.solve(eqs, [aa, bb, w1, w2], dict=True)
got4 = None
for s in sols:
    av, bv, w1v, w2v = [sp.nsimplify(s[v]) for v in (aa, bb, w1, w2)]
    if av.is_real and 0 < float(av) < 0.5 and 0 < float(bv) < 0.5 and float(av) != float(bv):
        a_ = mpf(sp.N(av, 50).__str__()); b_ = mpf(sp.N(bv, 50).__str__())
        w1_ = mpf(sp.N(w1v, 50).__str__()); w2_ = mpf(sp.N(w2v, 50).__str__())
        lams, ws = [], []
        for t, w in ((a_, w1_), (b_, w2_)):
            c = 1 - 2 * t
            lams += [(c, t, t), (t, c, t), (t, t, c)]
            ws += [w, w, w]
        if verify(lams, ws, 4) < mpf('1e-30'):
            got4 = (lams, ws)
            print("deg4 orbit params:", mp.nstr(a_, 17), mp.nstr(b_, 17), mp.nstr(w1_, 17), mp.nstr(w2_, 17))
            break
assert got4, f"no degree-4 solution found: {sols}"
rules[4] = got4

# degree 5: closed form with sqrt(15)
s15 = mp.sqrt(15)
a1 = (6 + s15) / 21; w1_ = (155 + s15) / 1200
a2 = (6 - s15) / 21; w2_ = (155 - s15) / 1200
lams = [(third, third, third)]
ws = [mpf(9) / 40]
for t, w in ((a1, w1_), (a2, w2_)):
    c = 1 - 2 * t
    lams += [(c, t, t), (t, c, t), (t, t, c)]
    ws += [w, w, w]
rules[5] = (lams, ws)

# degrees 7,9,...,21 via symmetrized conical rules (n = 4..11)
for n in range(4, 12):
    deg = 2 * n - 1
    pts, wts = conical_rule(n)
    lams, ws = symmetrize(pts, wts)
    rules[deg] = (lams, ws)

# certify and emit
lines = []
lines.append("// Symmetric triangle quadrature tables (barycentric points, weights sum to 1).")
lines.append("// Generated by tools/gen_quadrature_tables.py -- do not edit by hand.")
lines.append("// Degrees 1-5 are the classical minimal symmetric rules; higher degrees are")
lines.append("// S3-symmetrized conical-product Gauss rules of odd degree 2n-1.")
lines.append("")
lines.append('#include "stokesmini/quadrature.hpp"')
lines.append("")
lines.append("namespace stokesmini::detail {")
lines.append("")
order = sorted(rules)
for deg in order:
    lams, ws = rules[deg]
    check_invariants(lams, ws)
    err = verify(lams, ws, deg)
    print(f"degree {deg:2d}: {len(ws):3d} points, certification max rel err = {mp.nstr(err, 3)}")
    assert err < mpf('1e-30'), f"degree {deg} fails certification"
    lines.append(f"static const double pts_d{deg}[][3] = {{")
    for l in lams:
        lines.append("    {%s, %s, %s}," % tuple(mp.nstr(v, 22, strip_zeros=False) for v in l))
    lines.append("};")
    lines.append(f"static const double wts_d{deg}[] = {{")
    for w in ws:
        lines.append("    %s," % mp.nstr(w, 22, strip_zeros=False))
    lines.append("};")
    lines.append("")
lines.append("const RawQuadratureRule kTriangleRules[] = {")
for deg in order:
    npts = len(rules[deg][1])
    lines.append(f"    {{{deg}, {npts}, pts_d{deg}, wts_d{deg}}},")
lines.append("};")
lines.append(f"const int kTriangleRuleCount = {len(order)};")
lines.append("")
lines.append("}  // namespace stokesmini::detail")
import os
out_path = os.path.join(os.path.dirname(os.path.abspath(__file__)), '..', 'src',
                        'quadrature_tables.cpp')
with open(out_path, 'w') as f:
    f.write("\n".join(lines) + "\n")
print(f"wrote {out_path}")
