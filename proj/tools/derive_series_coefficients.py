#!/usr/bin/env python3
"""Exact derivation of the closed-form correction kernels.

Every connected diagram integral is a sum of terms
    c * x^p * exp(h * x)        (x = beta * Omega)
once one vertex is pinned at tau = 0 and the remaining vertices are split
into ordered sub-domains, because the propagator numerator
cosh(x/2 - Omega*s) is a sum of two exponentials on each sub-domain.
This script integrates those terms exactly with rational arithmetic and
writes include/anharm/detail/series_coefficients.hpp.

Usage: python3 tools/derive_series_coefficients.py > include/anharm/detail/series_coefficients.hpp
"""
import itertools
from collections import defaultdict
from fractions import Fraction as Fr
from math import factorial

TAYLOR_TERMS = 24

# (symmetry factor, [(vertex_a, vertex_b, power), ...])
DIAGRAMS = {
    2: [(24, [(0, 1, 4)])],
    3: [(1728, [(0, 1, 2), (1, 2, 2), (2, 0, 2)])],
    4: [
        (62208, [(0, 1, 2), (1, 2, 2), (2, 3, 2), (3, 0, 2)]),
        (248832, [(0, 1, 2), (2, 3, 2), (1, 2, 1), (1, 3, 1), (0, 2, 1), (0, 3, 1)]),
        (55296, [(0, 1, 3), (2, 3, 3), (1, 2, 1), (3, 0, 1)]),
    ],
}


def _add(d, k, v):
    d[k] += v
    if d[k] == 0:
        del d[k]


def _mul(a, b):
    out = defaultdict(Fr)
    for (pa, ea), ca in a.items():
        for (pb, eb), cb in b.items():
            key = (tuple(x + y for x, y in zip(pa, pb)), tuple(x + y for x, y in zip(ea, eb)))
            _add(out, key, ca * cb)
    return out


def _cosh_sep(lo, hi, nvars):
    # cosh(x/2 - (t_hi - t_lo)); index -1 is the pinned vertex at 0.
    # Exponents of x are stored in halves (last slot).
    out = defaultdict(Fr)
    for s in (1, -1):
        e = [0] * (nvars + 1)
        e[nvars] = s
        if hi >= 0:
            e[hi] -= s
        if lo >= 0:
            e[lo] += s
        _add(out, ((0,) * (nvars + 1), tuple(e)), Fr(1, 2))
    return out


def _integrate(a, k, lo, nvars):
    # integral over t_k from t_lo (or 0) to x
    out = defaultdict(Fr)
    for (p, e), c in a.items():
        pk, ck = p[k], e[k]
        if ck == 0:
            anti = [(pk + 1, Fr(1, pk + 1), False)]
        else:
            anti = [(pk - j, Fr((-1) ** j * factorial(pk), factorial(pk - j)) / Fr(ck) ** (j + 1), True)
                    for j in range(pk + 1)]
        for pw, co, has_exp in anti:
            bp, be = list(p), list(e)
            bp[k], be[k] = 0, 0
            up, ue = bp[:], be[:]
            up[nvars] += pw
            if has_exp:
                ue[nvars] += 2 * ck
            _add(out, (tuple(up), tuple(ue)), c * co)
            if lo >= 0:
                lp, le = bp[:], be[:]
                lp[lo] += pw
                if has_exp:
                    le[lo] += ck
                _add(out, (tuple(lp), tuple(le)), -c * co)
            elif pw == 0:
                _add(out, (tuple(bp), tuple(be)), -c * co)
    return out


def diagram_numerator(edges, nv):
    """Integral of prod cosh(x/2 - |t_a - t_b|)^k over [0, x]^(nv-1), t_0 = 0.

    Returns {(p, h): c} meaning sum c * x^p * exp(h x).
    """
    nvars = nv - 1
    total = defaultdict(Fr)
    for perm in itertools.permutations(range(nvars)):
        rank = {0: -1}
        for r, v in enumerate(perm):
            rank[v + 1] = r
        expr = {((0,) * (nvars + 1), (0,) * (nvars + 1)): Fr(1)}
        for a, b, k in edges:
            lo, hi = (a, b) if rank[a] < rank[b] else (b, a)
            f = _cosh_sep(lo - 1, hi - 1, nvars)
            for _ in range(k):
                expr = _mul(expr, f)
        for r in reversed(range(nvars)):
            expr = _integrate(expr, perm[r], perm[r - 1] if r > 0 else -1, nvars)
        for key, v in expr.items():
            _add(total, key, v)
    out = defaultdict(Fr)
    for (p, e), c in total.items():
        assert all(v == 0 for v in p[:nvars]) and all(v == 0 for v in e[:nvars])
        assert e[nvars] % 2 == 0
        _add(out, (p[nvars], e[nvars] // 2), c)
    return dict(out)


def kernel_numerator(order):
    total = defaultdict(Fr)
    for n_sym, edges in DIAGRAMS[order]:
        for key, v in diagram_numerator(edges, order).items():
            _add(total, key, n_sym * v)
    return dict(total)


def q_form(order, num):
    # K = 4^n * sum c x^p q^(n-h) / (1-q)^(2n),  q = exp(-x)
    out = defaultdict(Fr)
    for (p, h), c in num.items():
        _add(out, (p, order - h), c * 4 ** order)
    return dict(out)


def taylor(order, num, terms):
    # x^(n+1) K(x) = j(x) * (x / sinh(x/2))^(2n), j = numerator / x^(n-1)
    m = terms + order + 2
    series = [Fr(0)] * m
    for (p, h), c in num.items():
        for i in range(m - p):
            series[p + i] += c * Fr(h) ** i / factorial(i)
    assert all(v == 0 for v in series[: order - 1])
    j = series[order - 1: order - 1 + terms]
    s = [Fr(0)] * terms
    for i in range(0, terms, 2):
        s[i] = Fr(1, 2 ** (i + 1) * factorial(i + 1))
    inv = [Fr(0)] * terms
    inv[0] = 1 / s[0]
    for k in range(1, terms):
        inv[k] = -sum(s[i] * inv[k - i] for i in range(1, k + 1)) / s[0]

    def mul(a, b):
        return [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(terms)]

    r = [Fr(1)] + [Fr(0)] * (terms - 1)
    for _ in range(2 * order):
        r = mul(r, inv)
    return mul(j, r)


def _lit(v):
    return repr(float(v))


def main():
    print("// Generated by tools/derive_series_coefficients.py. Do not edit by hand.")
    print("#pragma once\n")
    print("#include <array>\n")
    print("namespace anharm::detail {\n")
    print("struct QTerm {\n  int x_power;\n  int q_power;\n  double coefficient;\n};\n")
    for order in (2, 3, 4):
        num = kernel_numerator(order)
        qf = sorted(q_form(order, num).items())
        tay = taylor(order, num, TAYLOR_TERMS)
        print(f"// order {order}: K(x) = sum c x^p q^j / (1 - q)^{2 * order}")
        print(f"inline constexpr std::array<QTerm, {len(qf)}> kQForm{order}{{{{")
        for (p, jq), c in qf:
            print(f"    {{{p}, {jq}, {_lit(c)}}},")
        print("}};\n")
        print(f"// order {order}: x^{order + 1} K(x) = sum_i a_i x^i")
        print(f"inline constexpr std::array<double, {TAYLOR_TERMS}> kTaylor{order}{{{{")
        for c in tay:
            print(f"    {_lit(c)},")
        print("}};\n")
    print("}  // namespace anharm::detail")


if __name__ == "__main__":
    main()
