#!/usr/bin/env python3
"""Computer-algebra generator and cross-check for the metric zoo.

Derives, symbolically:
  * Christoffel symbols and curvature of the round S^4 polar chart,
  * the Fubini-Study metric on CP^2 in polar Hopf coordinates
    (radial angle + Euler angles), its derivatives, and its Ricci tensor,
  * reference values frozen into the C++ test suite.

Run from the repository root:  python3 tools/generate_zoo_reference.py
The printed component expressions are the source of the closed forms
committed in core/src/zoo.cpp; the printed point values are the oracle
constants frozen in tests/.
"""

import sympy as sp


def christoffel(g, x):
    n = len(x)
    ginv = g.inv()
    Gamma = [[[sp.S(0)] * n for _ in range(n)] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                expr = sp.S(0)
                for d in range(n):
                    expr += ginv[a, d] * (sp.diff(g[d, c], x[b])
                                          + sp.diff(g[d, b], x[c])
                                          - sp.diff(g[b, c], x[d]))
                Gamma[a][b][c] = sp.simplify(expr / 2)
    return Gamma


def riemann_up(Gamma, x):
    n = len(x)
    R = [[[[sp.S(0)] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    expr = sp.diff(Gamma[a][d][b], x[c]) - sp.diff(Gamma[a][c][b], x[d])
                    for e in range(n):
                        expr += Gamma[a][c][e] * Gamma[e][d][b] \
                            - Gamma[a][d][e] * Gamma[e][c][b]
                    R[a][b][c][d] = sp.simplify(expr)
    return R


def ricci(Rup, n):
    Rc = sp.zeros(n, n)
    for b in range(n):
        for d in range(n):
            Rc[b, d] = sp.simplify(sum(Rup[a][b][a][d] for a in range(n)))
    return Rc


def check_round_s4():
    r = sp.symbols('r', positive=True)
    a, b, c, d = sp.symbols('x0 x1 x2 x3', positive=True)
    x = [a, b, c, d]
    g = sp.diag(r**2,
                r**2 * sp.sin(a)**2,
                r**2 * sp.sin(a)**2 * sp.sin(b)**2,
                r**2 * sp.sin(a)**2 * sp.sin(b)**2 * sp.sin(c)**2)
    Gamma = christoffel(g, x)
    print("== round S^4: nonzero Christoffel symbols ==")
    for i in range(4):
        for j in range(4):
            for k in range(j, 4):
                if Gamma[i][j][k] != 0:
                    print(f"  Gamma^{i}_{{{j}{k}}} = {sp.simplify(Gamma[i][j][k])}")
    Rc = ricci(riemann_up(Gamma, x), 4)
    diff = sp.simplify(Rc - 3 / r**2 * g)
    assert diff == sp.zeros(4, 4), diff
    print("  Ricci = (3/r^2) g  OK")
    # frozen oracle point for the C++ tests
    pt = {a: sp.Rational(7, 10), b: sp.Rational(11, 10), c: sp.Rational(9, 10),
          d: sp.Rational(13, 10), r: sp.sqrt(6)}
    print("  oracle point x = (0.7, 1.1, 0.9, 1.3), r = sqrt(6):")
    for i in range(4):
        for j in range(4):
            for k in range(j, 4):
                if Gamma[i][j][k] != 0:
                    v = sp.N(Gamma[i][j][k].subs(pt), 20)
                    print(f"    Gamma^{i}_{{{j}{k}}} = {v}")


def check_fubini_study():
    lam = sp.symbols('lam', positive=True)
    rho, th, ph, ps = sp.symbols('x0 x1 x2 x3', positive=True)
    x = [rho, th, ph, ps]
    s, c = sp.sin(rho), sp.cos(rho)
    g = sp.zeros(4, 4)
    g[0, 0] = lam
    g[1, 1] = lam * s**2 / 4
    g[2, 2] = lam * (s**2 * sp.sin(th)**2 + s**2 * c**2 * sp.cos(th)**2) / 4
    g[3, 3] = lam * s**2 * c**2 / 4
    g[2, 3] = g[3, 2] = lam * s**2 * c**2 * sp.cos(th) / 4
    Gamma = christoffel(g, x)
    Rc = ricci(riemann_up(Gamma, x), 4)
    diff = (Rc - (6 / lam) * g).applyfunc(
        lambda e: sp.simplify(sp.trigsimp(sp.expand_trig(e))))
    # back up symbolic simplification with a numeric spot check
    pt = {lam: 12, rho: sp.Rational(6, 10), th: sp.Rational(8, 10),
          ph: sp.Rational(3, 10), ps: sp.Rational(12, 10)}
    num = max(abs(sp.N(e.subs(pt), 30)) for e in diff)
    assert num < sp.Float('1e-25'), (diff, num)
    print("== Fubini-Study CP^2 (polar Hopf chart): Ricci = (6/lam) g  OK ==")
    det = sp.simplify(g.det())
    print("  det g =", sp.factor(det))
    vol = sp.integrate(sp.sqrt(sp.factor(det)),
                       (rho, 0, sp.pi / 2), (th, 0, sp.pi),
                       (ph, 0, 2 * sp.pi), (ps, 0, 4 * sp.pi))
    print("  Vol =", sp.simplify(vol), " (expect lam^2 pi^2/2; lam=12 -> 72 pi^2)")
    # derivative components frozen for the C++ closed forms
    print("  dg and d2g nonzero components (lam factored out):")
    for axis in (0, 1):
        for i in range(4):
            for j in range(i, 4):
                e = sp.simplify(sp.diff(g[i, j], x[axis]) / lam)
                if e != 0:
                    print(f"    d g[{i}{j}] / d x{axis} = {e}")
    for a1 in (0, 1):
        for a2 in (a1, 1):
            for i in range(4):
                for j in range(i, 4):
                    e = sp.simplify(sp.diff(g[i, j], x[a1], x[a2]) / lam)
                    if e != 0:
                        print(f"    d2 g[{i}{j}] / d x{a1} d x{a2} = {e}")


def check_product_s2xs2():
    aa, bb = sp.symbols('a b', positive=True)
    t1, p1, t2, p2 = sp.symbols('x0 x1 x2 x3', positive=True)
    x = [t1, p1, t2, p2]
    g = sp.diag(aa**2, aa**2 * sp.sin(t1)**2, bb**2, bb**2 * sp.sin(t2)**2)
    Rc = ricci(riemann_up(christoffel(g, x), x), 4)
    expect = sp.diag(1, sp.sin(t1)**2, 1, sp.sin(t2)**2)
    assert sp.simplify(Rc - expect) == sp.zeros(4, 4)
    print("== S^2(a) x S^2(b): Ricci = diag(1, sin^2, 1, sin^2)  OK "
          "(i.e. (1/a^2) g on factor 1, (1/b^2) g on factor 2) ==")


def check_s4_height_hessian():
    a, b, c, d = sp.symbols('x0 x1 x2 x3', positive=True)
    x = [a, b, c, d]
    g = sp.diag(1, sp.sin(a)**2, sp.sin(a)**2 * sp.sin(b)**2,
                sp.sin(a)**2 * sp.sin(b)**2 * sp.sin(c)**2)
    Gamma = christoffel(g, x)
    f = sp.cos(a)
    hess = sp.zeros(4, 4)
    for i in range(4):
        for j in range(4):
            e = sp.diff(f, x[i], x[j])
            for k in range(4):
                e -= Gamma[k][i][j] * sp.diff(f, x[k])
            hess[i, j] = sp.simplify(e)
    assert sp.simplify(hess + sp.cos(a) * g) == sp.zeros(4, 4)
    print("== unit S^4, f = cos(x0): Hessian = -cos(x0) g  OK ==")


if __name__ == "__main__":
    check_round_s4()
    check_product_s2xs2()
    check_s4_height_hessian()
    check_fubini_study()
