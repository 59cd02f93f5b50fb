#!/usr/bin/env python3
"""Regenerate include/humbert/quadrature_tables.hpp.

Gauss-Legendre nodes and weights on [-1, 1] for the 16- and 32-point
rules, computed with mpmath Newton iteration on Legendre polynomials and
printed to 25 significant digits. Run from the repository root:

    python3 tools/make_quadrature_tables.py
"""
import mpmath as mp

mp.mp.dps = 40

OUT = "include/humbert/quadrature_tables.hpp"


def gauss_legendre(n):
    """Nodes/weights of the n-point rule, nodes ascending."""
    nodes, weights = [], []
    for k in range(1, n + 1):
        # Chebyshev-like initial guess, refined by Newton on P_n
        x = mp.cos(mp.pi * (k - mp.mpf(1) / 4) / (n + mp.mpf(1) / 2))
        for _ in range(60):
            p, dp = mp.legendre(n, x), mp.diff(lambda t: mp.legendre(n, t), x)
            dx = p / dp
            x -= dx
            if abs(dx) < mp.mpf(10)**(-(mp.mp.dps - 3)):
                break
        dp = mp.diff(lambda t: mp.legendre(n, t), x)
        w = 2 / ((1 - x**2) * dp**2)
        nodes.append(x)
        weights.append(w)
    order = sorted(range(n), key=lambda i: nodes[i])
    return [nodes[i] for i in order], [weights[i] for i in order]


def emit(f, name, vals):
    f.write(f"inline constexpr long double {name}[{len(vals)}] = {{\n")
    for v in vals:
        f.write(f"    {mp.nstr(v, 25, strip_zeros=False)}L,\n")
    f.write("};\n\n")


def main():
    with open(OUT, "w") as f:
        f.write(
            "// Generated by tools/make_quadrature_tables.py -- do not edit by hand.\n"
            "// Gauss-Legendre nodes/weights on [-1, 1], 25 significant digits.\n"
            "#pragma once\n\n"
            "namespace humbert::tables {\n\n")
        for n in (16, 32):
            nodes, weights = gauss_legendre(n)
            emit(f, f"gl{n}_nodes", nodes)
            emit(f, f"gl{n}_weights", weights)
        f.write("} // namespace humbert::tables\n")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
