"""Frozen reference values for the test suite.

V_m(x) by adaptive mpmath quadrature of the u-integral at 40 digits.
Interaction coefficients by integrating the squared two-particle amplitude in
real coordinates (sigma = s1 + i s2, tau = t e^{i phi}) with sympy: Gaussian
moments in s1, s2 and an exact phi average leave a polynomial in t^2 whose
coefficients, times alpha!, are the unnormalized weights.

Run:  python3 tests/oracles/generate.py > tests/oracle_values.hpp
"""
import mpmath as mp
import sympy as sp

mp.mp.dps = 40


def vm(m, x):
    x = mp.mpf(x)
    f = lambda u: u**m * mp.e**(-u) / mp.sqrt(x * x + u)
    pts = [0, x * x + 1, m + 1, m + 10 * mp.sqrt(m + 1) + 10, mp.inf]
    pts = sorted(set(pts))
    return mp.quad(f, pts) / mp.factorial(m)


s1, s2, t, phi = sp.symbols('s1 s2 t phi', real=True)


def gauss_moment(k):
    # int s^k e^{-s^2} ds over R
    if k % 2:
        return 0
    return sp.gamma(sp.Rational(k + 1, 2))


def weights(amp):
    """amp(z1, z2) -> complex sympy expr; returns normalized weights b_alpha."""
    sig = s1 + sp.I * s2
    tau = t * (sp.cos(phi) + sp.I * sp.sin(phi))
    z1 = (sig + tau) / sp.sqrt(2)
    z2 = (sig - tau) / sp.sqrt(2)
    a = sp.expand(amp(z1, z2))
    dens = sp.expand(a * sp.conjugate(a))
    dens = sp.expand(dens.subs({sp.conjugate(s1): s1, sp.conjugate(s2): s2, sp.conjugate(t): t,
                                sp.conjugate(phi): phi}))
    poly = sp.Poly(dens, s1, s2)
    acc = 0
    for (k1, k2), c in poly.terms():
        acc += c * gauss_moment(k1) * gauss_moment(k2)
    acc = sp.expand(sp.simplify(acc))
    acc = sp.integrate(sp.expand(sp.expand_trig(acc)), (phi, 0, 2 * sp.pi))
    p = sp.Poly(sp.expand(acc), t)
    raw = {}
    for (k,), c in p.terms():
        assert k % 2 == 0
        raw[k // 2] = sp.nsimplify(c) * sp.factorial(k // 2)
    n = max(raw)
    vals = [raw.get(i, 0) for i in range(n + 1)]
    tot = sum(vals)
    return [sp.Rational(v / tot) for v in vals]


def product(a, b):
    return weights(lambda z1, z2: z1**a * z2**b)


def slater(j, k):
    return weights(lambda z1, z2: z1**j * z2**k - z1**k * z2**j)


def det(ms):
    pairs = [(ms[i], ms[k]) for i in range(len(ms)) for k in range(i + 1, len(ms))]
    top = ms[-2] + ms[-1]
    acc = [sp.Integer(0)] * (top + 1)
    for (j, k) in pairs:
        w = slater(j, k)
        for i, v in enumerate(w):
            acc[i] += v / len(pairs)
    return acc


def fmt(r):
    return f"{float(r):.17g}"


def main():
    out = []
    out.append("#pragma once")
    out.append("// Generated by tests/oracles/generate.py; do not edit by hand.")
    out.append("")
    out.append("#include <vector>")
    out.append("")
    out.append("namespace oracle {")
    out.append("")
    out.append("struct VmValue {\n    int m;\n    double x;\n    double value;\n};")
    out.append("")
    out.append("inline std::vector<VmValue> const vm_values = {")
    for m in [0, 1, 2, 3, 5, 10, 20, 50, 100, 200]:
        for x in ["0", "0.05", "0.3", "1", "1.9", "2.1", "3", "7", "15", "40", "200"]:
            out.append(f"    {{{m}, {x}, {mp.nstr(vm(m, x), 20)}}},")
    out.append("};")
    out.append("")
    out.append("struct Coefficients {\n    char const* kind;\n    std::vector<int> m;\n    std::vector<double> weights;\n};")
    out.append("")
    out.append("inline std::vector<Coefficients> const coefficients = {")
    for (a, b) in [(0, 0), (1, 1), (0, 2), (2, 3), (3, 3), (1, 3)]:
        w = product(a, b)
        out.append(f'    {{"product", {{{a}, {b}}}, {{{", ".join(fmt(v) for v in w)}}}}},  // {" ".join(str(v) for v in w)}')
    for (j, k) in [(0, 1), (1, 2), (0, 3), (2, 5)]:
        w = slater(j, k)
        out.append(f'    {{"slater", {{{j}, {k}}}, {{{", ".join(fmt(v) for v in w)}}}}},  // {" ".join(str(v) for v in w)}')
    for ms in [[0, 1, 2], [0, 1, 2, 3]]:
        w = det(ms)
        out.append(f'    {{"det", {{{", ".join(map(str, ms))}}}, {{{", ".join(fmt(v) for v in w)}}}}},  // {" ".join(str(v) for v in w)}')
    out.append("};")
    out.append("")
    out.append("} // namespace oracle")
    print("\n".join(out))


if __name__ == "__main__":
    main()
