#!/usr/bin/env python3
"""Recomputes report quantities with sympy/numpy and compares them with
`parabolica analyze`. Exit status 0 when every comparison agrees."""

import argparse
import json
import random
import subprocess
import sys

import numpy as np
import sympy as sp
from skimage import measure

x, y, u, v, w = sp.symbols("x y u v w")

CORPUS = {
    "q_cubic": "x^2 + y^2 + y*(x^2 + y^2)",
    "g_quartic": "y*(x+3)*(x-y)*(y+x-3)",
    "pair_f": "x^4 + 6*x^2*y^2 - y^4 + 3*x^2*y - 3*x*y^2 + 10*y^2 - 10*x^2",
    "pair_g": "x^4 + 6*x^2*y^2 - y^4 + 3*x^2*y - 3*x*y^2 + 10*y^2 + 10*x^2",
    "elliptic_quartic": "x^4 + 3*x^2*y^2 + y^4 + x*y^2 - x^2",
    "quintic_transversal": "x^5 - 3*x^3*y^2 + y^5 + x^2 + y^2",
    "quintic_five_lines": "x^5 - 4*x^3*y^2 + 2*x*y^4 + x^2 + y^2",
    "three_lines_cubic": "x*y*(x - y) + x^2 - y",
}


def parse(text):
    return sp.expand(sp.sympify(text.replace("^", "**"), locals={"x": x, "y": y}))


def hess(f):
    return sp.expand(sp.diff(f, x, 2) * sp.diff(f, y, 2) - sp.diff(f, x, y) ** 2)


def top_part(f):
    p = sp.Poly(f, x, y)
    n = p.total_degree()
    return sp.Add(*[c * x**i * y**j for (i, j), c in p.terms() if i + j == n]), n


def equator_point_count(f):
    fn, _ = top_part(f)
    roots = sp.Poly(fn.subs(y, 1), x).real_roots()
    k = len(set(roots))
    if sp.Poly(fn, x, y).degree(x) < sp.Poly(fn, x, y).total_degree():
        k += 1  # y divides f_n: the direction (1, 0)
    return 2 * k


def godrons(f, box):
    """Real common zeros of Hess f and the tangency condition, found from a
    resultant after a rational rotation, refined with Newton."""
    c, s = sp.Rational(3, 5), sp.Rational(4, 5)
    g = sp.expand(f.subs({x: c * x - s * y, y: s * x + c * y}, simultaneous=True))
    H = hess(g)
    gxx, gxy, gyy = sp.diff(g, x, 2), sp.diff(g, x, y), sp.diff(g, y, 2)
    Hx, Hy = sp.diff(H, x), sp.diff(H, y)
    T1 = sp.expand(gxy * Hx - gxx * Hy)
    T2 = sp.expand(gyy * Hx - gxy * Hy)
    T = T1 if not T1.is_zero else T2
    common = sp.gcd(H, T)
    if common.free_symbols:
        T = sp.cancel(T / common)
    res = sp.Poly(sp.resultant(sp.Poly(H, y), sp.Poly(T, y)), x)
    if res.is_zero:
        return None
    Hf = sp.lambdify((x, y), H)
    grad = sp.lambdify((x, y), [Hx, Hy])
    second = sp.lambdify((x, y), [gxx, gxy, gyy])
    T1f, T2f = sp.lambdify((x, y), T1), sp.lambdify((x, y), T2)
    Hy_poly = sp.Poly(H, y)
    found = []
    for r in sp.Poly(sp.sqf_part(res.as_expr()), x).real_roots():
        xr = float(r)
        if Hy_poly.degree() <= 0:
            continue
        for yr in np.roots([float(cf) for cf in sp.Poly(H.subs(x, xr), y).all_coeffs()]):
            if abs(yr.imag) > 1e-6 * max(1.0, abs(yr)):
                continue
            p = np.array([xr, yr.real])
            gx, gy = grad(*p)
            a, b, cc = second(*p)
            gnorm = np.hypot(gx, gy)
            t1 = abs(T1f(*p)) / ((abs(a) + abs(b)) * gnorm + 1e-300)
            t2 = abs(T2f(*p)) / ((abs(b) + abs(cc)) * gnorm + 1e-300)
            if min(t1, t2) > 1e-6 or max(t1, t2) > 1e-3:
                continue
            X = float(c) * p[0] - float(s) * p[1]
            Y = float(s) * p[0] + float(c) * p[1]
            if max(abs(X), abs(Y)) <= box and not any(np.hypot(X - q0, Y - q1) < 1e-6 for q0, q1 in found):
                found.append((X, Y))
    return found


def compact_extent(h):
    """Half-width of a square holding a compact curve h = 0: its extreme points
    in x and y are among the critical points found by resultants."""
    half = 1.0
    for var, other in ((x, y), (y, x)):
        r = sp.Poly(sp.resultant(h, sp.diff(h, other), other), var)
        if r.degree() > 0:
            half = max([half] + [abs(float(t)) for t in sp.Poly(sp.sqf_part(r.as_expr()), var).real_roots()])
    return 1.25 * half + 0.5


def closed_oval_count(h, half, cells=1600):
    hf = sp.lambdify((x, y), h, "numpy")
    t = np.linspace(-half, half, cells)
    X, Y = np.meshgrid(t, t)
    Z = hf(X, Y) * np.ones_like(X)
    contours = measure.find_contours(Z, 0.0)
    return sum(1 for c in contours if np.allclose(c[0], c[-1]) and len(c) > 8)


def edla_identities(f):
    """Lemma-S and the discriminant identity from the pull-back of II_f."""
    _, n = top_part(f)
    ok = True
    for sigma in (1, -1):
        X, Y = sigma / w, v / w
        fxx = sp.diff(f, x, 2).subs({x: X, y: Y}, simultaneous=True)
        fxy = sp.diff(f, x, y).subs({x: X, y: Y}, simultaneous=True)
        fyy = sp.diff(f, y, 2).subs({x: X, y: Y}, simultaneous=True)
        j11, j12, j21, j22 = 0, -sigma / w**2, 1 / w, -v / w**2
        m = w ** (n + 2)
        pvv = sp.expand(sp.simplify(m * (fxx * j11**2 + 2 * fxy * j11 * j21 + fyy * j21**2)))
        pvw = sp.expand(sp.simplify(m * 2 * (fxx * j11 * j12 + fxy * (j11 * j22 + j21 * j12) + fyy * j21 * j22)))
        pww = sp.expand(sp.simplify(m * (fxx * j12**2 + 2 * fxy * j12 * j22 + fyy * j22**2)))
        disc = sp.expand(pvw**2 / 4 - pvv * pww)
        Hh = sp.expand(w ** (2 * n - 4) * hess(f).subs({x: X, y: Y}, simultaneous=True))
        ok &= sp.expand(disc + w**2 * Hh) == 0
        # The dw^2 coefficient at w = 0 is S(sigma, v, 0) = n(n-1) f_n(sigma, v).
        fn, _ = top_part(f)
        ok &= sp.expand(pww.subs(w, 0) - n * (n - 1) * fn.subs({x: sigma, y: v}, simultaneous=True)) == 0
    # Lemma-S in homogeneous form: S = sum_k k(k-1) f_k u^? w^(n-k).
    p = sp.Poly(f, x, y)
    S = sum(sp.Integer(i + j) * (i + j - 1) * cf * u**i * v**j * w ** (n - i - j) for (i, j), cf in p.terms())
    # Euler: the same S comes from u^2 F_uu + 2uv F_uv + v^2 F_vv with F = w^n f(u/w, v/w).
    F = sp.expand(w**n * f.subs({x: u / w, y: v / w}, simultaneous=True))
    euler = sp.expand(u**2 * sp.diff(F, u, 2) + 2 * u * v * sp.diff(F, u, v) + v**2 * sp.diff(F, v, 2))
    ok &= sp.expand(S - euler) == 0
    return ok


def analyze(cli, poly):
    out = subprocess.run([cli, "analyze", "-e", poly], capture_output=True, text=True)
    return json.loads(out.stdout)


def random_cases(seed, count):
    rng = random.Random(seed)
    cases = {}
    for k in range(count):
        n = rng.choice([3, 4])
        terms = [f"{rng.randint(-4, 4)}*x^{i}*y^{d - i}" for d in range(2, n + 1) for i in range(d + 1)]
        terms.append(f"{rng.choice([-1, 1])}*x^{n}")
        cases[f"random_{k}"] = " + ".join(terms)
    return cases


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cli", required=True)
    ap.add_argument("--random", type=int, default=6)
    ap.add_argument("--seed", type=int, default=17)
    args = ap.parse_args()

    failures = 0

    def report(name, what, ok, detail=""):
        nonlocal failures
        failures += 0 if ok else 1
        print(f"{'ok  ' if ok else 'FAIL'} {name:22s} {what}{(': ' + detail) if detail else ''}")

    cases = dict(CORPUS)
    cases.update(random_cases(args.seed, args.random))
    for name, text in cases.items():
        f = parse(text)
        doc = analyze(args.cli, text)
        h = hess(f)
        report(name, "Hessian", sp.expand(parse(doc["input"]["hessian"]) - h) == 0)

        if "infinity" in doc:
            got = len(doc["infinity"]["points"])
            want = equator_point_count(f)
            report(name, "equator singular points", got == want, f"{got} vs {want}")

        if "godrons" in doc:
            pts = godrons(f, 1e6)
            if pts is None:
                report(name, "godrons", False, "oracle resultant vanished")
            else:
                got = doc["godrons"]["count"]
                located = all(
                    min(np.hypot(p["location"][0] - a, p["location"][1] - b) for a, b in pts) < 1e-5
                    for p in doc["godrons"]["points"]
                ) if pts else got == 0
                report(name, "godron count and locations", got == len(pts) and located, f"{got} vs {len(pts)}")

        comp = doc.get("compactness", {})
        if comp.get("hessian_compact") and "topology" in doc:
            half = compact_extent(h)
            got = doc["topology"]["P"] + doc["topology"]["N"]
            want = closed_oval_count(h, half)
            report(name, "oval count", got == want, f"{got} vs {want}")

        if top_part(f)[1] >= 3:
            report(name, "S and discriminant identities", edla_identities(f))

    print(f"{failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
