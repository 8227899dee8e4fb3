#!/usr/bin/env python3
"""Generate nested Gauss-Patterson quadrature tables (levels 0..8, i.e. 1..511
nodes on (-1,1)) in high precision and emit them as a C++ source file.

Each level l+1 rule is the optimal-degree (Kronrod-Patterson) extension of the
level l rule: 2^l new nodes are added as the roots of the Stieltjes-type
polynomial E orthogonal to all polynomials of degree <= n against the weight
W_n(x) = prod(x - x_i) of the current nodes.  Weights are recomputed for the
full extended node set by solving the interpolatory moment system in the
Legendre basis (exploiting the +/- symmetry of the nodes).

Usage: python3 gen_patterson.py > ../src/quad/patterson_tables.cpp
"""
import sys
from mpmath import mp, mpf, fdiv, fadd, fmul, fsub

mp.dps = 140  # 511-point extension needs well over double precision

MAX_LEVEL = 8


def legendre_eval_all(x, nmax):
    """P_0(x)..P_nmax(x) by recurrence."""
    vals = [mpf(1)]
    if nmax >= 1:
        vals.append(x)
    for n in range(1, nmax):
        vals.append(((2 * n + 1) * x * vals[n] - n * vals[n - 1]) / (n + 1))
    return vals


def legendre_roots_weights(n):
    """Gauss-Legendre nodes/weights, Newton iteration from Chebyshev guesses."""
    nodes = []
    weights = []
    for i in range(1, n + 1):
        x = mp.cos(mp.pi * (i - mpf(1) / 4) / (n + mpf(1) / 2))
        for _ in range(60):
            vals = legendre_eval_all(x, n)
            p, pm1 = vals[n], vals[n - 1]
            dp = n * (x * p - pm1) / (x * x - 1)
            dx = p / dp
            x = x - dx
            if abs(dx) < mpf(10) ** (-mp.dps + 5):
                break
        vals = legendre_eval_all(x, n)
        p, pm1 = vals[n], vals[n - 1]
        dp = n * (x * p - pm1) / (x * x - 1)
        nodes.append(x)
        weights.append(2 / ((1 - x * x) * dp * dp))
    order = sorted(range(n), key=lambda k: nodes[k])
    return [nodes[k] for k in order], [weights[k] for k in order]


def clenshaw_legendre(coeffs, x):
    """Evaluate sum_k coeffs[k] * P_k(x) via Clenshaw."""
    n = len(coeffs) - 1
    b1 = mpf(0)
    b2 = mpf(0)
    for k in range(n, 0, -1):
        alpha = fdiv(mpf(2 * k + 1), mpf(k + 1)) * x
        beta = -fdiv(mpf(k + 1), mpf(k + 2))
        b = coeffs[k] + alpha * b1 + beta * b2
        b2 = b1
        b1 = b
    # P_0 = 1, P_1 = x ; alpha_0 = x, beta_0 = -1/2
    return coeffs[0] + x * b1 - fdiv(mpf(1), mpf(2)) * b2


def extend(nodes):
    """One Kronrod-Patterson extension step: n nodes -> n+1 new nodes."""
    n = len(nodes)
    ng = 2 * n + 4  # Gauss-Legendre order for exact moment integrals
    gx, gw = legendre_roots_weights(ng)
    # W(x) at GL nodes
    Wg = []
    for x in gx:
        w = mpf(1)
        for xi in nodes:
            w = w * (x - xi)
        Wg.append(w)
    # P_k at GL nodes
    Pg = [legendre_eval_all(x, n + 1) for x in gx]
    # moment matrix M[j][k] = int W * P_j * P_k, j=0..n, k=0..n+1
    # solve sum_k b_k M[j][k] = 0 with b_{n+1} = 1
    A = mp.matrix(n + 1, n + 1)
    rhs = mp.matrix(n + 1, 1)
    for j in range(n + 1):
        for k in range(n + 2):
            s = mpf(0)
            for g in range(ng):
                s += gw[g] * Wg[g] * Pg[g][j] * Pg[g][k]
            if k <= n:
                A[j, k] = s
            else:
                rhs[j] = -s
    b = mp.lu_solve(A, rhs)
    coeffs = [b[k] for k in range(n + 1)] + [mpf(1)]

    # E is even (n odd, symmetric nodes), so find positive roots and mirror.
    # One root lies in each gap of the nonnegative current nodes.
    nonneg = [x for x in nodes if x >= 0]
    pts = nonneg + [mpf(1)]
    brackets = [(pts[i], pts[i + 1]) for i in range(len(pts) - 1)]
    roots = []
    for (a, c) in brackets:
        fa = clenshaw_legendre(coeffs, a)
        fc = clenshaw_legendre(coeffs, c)
        assert fa * fc < 0, "no sign change in bracket"
        lo, hi, flo, fhi = a, c, fa, fc
        for _ in range(80):
            mid = (lo + hi) / 2
            fm = clenshaw_legendre(coeffs, mid)
            if fm == 0:
                lo = hi = mid
                break
            if flo * fm < 0:
                hi, fhi = mid, fm
            else:
                lo, flo = mid, fm
        # secant polish inside the bracket
        x0, x1, f0, f1 = lo, hi, flo, fhi
        for _ in range(60):
            if f1 == f0:
                break
            x2 = x1 - f1 * (x1 - x0) / (f1 - f0)
            if not (lo <= x2 <= hi):
                x2 = (lo + hi) / 2
            f2 = clenshaw_legendre(coeffs, x2)
            x0, f0, x1, f1 = x1, f1, x2, f2
            if abs(x1 - x0) < mpf(10) ** (-mp.dps + 8):
                break
        roots.append(x1)
    assert len(roots) == (n + 1) // 2
    allnodes = sorted(list(nodes) + roots + [-r for r in roots])
    return allnodes


def rule_weights(nodes):
    """Interpolatory weights via the even-moment system (symmetric rule)."""
    n = len(nodes)
    pos = [x for x in nodes if x > 0]
    has_zero = any(abs(x) < mpf(10) ** (-mp.dps + 10) for x in nodes)
    m = len(pos) + (1 if has_zero else 0)
    # unknowns: weight of 0 (if present) and weights of positive nodes
    # equations: sum_i w_i P_{2k}(x_i) = 2*delta_{k0}, k = 0..m-1
    xs = ([mpf(0)] if has_zero else []) + pos
    mult = ([1] if has_zero else []) + [2] * len(pos)
    A = mp.matrix(m, m)
    rhs = mp.matrix(m, 1)
    P = [legendre_eval_all(x, 2 * m) for x in xs]
    for k in range(m):
        for i in range(m):
            A[k, i] = mult[i] * P[i][2 * k]
        rhs[k] = mpf(2) if k == 0 else mpf(0)
    w = mp.lu_solve(A, rhs)
    out = {}
    idx = 0
    if has_zero:
        out[0] = w[0]
        idx = 1
    for i, x in enumerate(pos):
        out[float(x) and i + idx] = None  # placeholder, not used
    # build full weight list matching sorted nodes
    wmap = {}
    if has_zero:
        wmap[mpf(0)] = w[0]
    for i, x in enumerate(pos):
        wmap[x] = w[(1 if has_zero else 0) + i]
    full = []
    for x in nodes:
        if x < 0:
            full.append(wmap[-x])
        elif has_zero and abs(x) < mpf(10) ** (-mp.dps + 10):
            full.append(wmap[mpf(0)])
        else:
            full.append(wmap[x])
    return full


def check_rule(nodes, weights, level):
    """Degree exactness check: level l >= 1 has degree 3*2^l - 1."""
    deg = 1 if level == 0 else 3 * 2 ** level - 1
    for k in range(0, deg + 1):
        exact = mpf(0) if k % 2 == 1 else fdiv(mpf(2), mpf(k + 1))
        got = mpf(0)
        for x, w in zip(nodes, weights):
            got += w * x ** k
        err = abs(got - exact)
        assert err < mpf(10) ** (-mp.dps + 12), (level, k, err)


def main():
    rules = []
    nodes = [mpf(0)]
    for level in range(0, MAX_LEVEL + 1):
        if level > 0:
            nodes = extend(nodes)
        weights = rule_weights(nodes)
        check_rule(nodes, weights, level)
        # nestedness check
        if level > 0:
            prev = set(mp.nstr(x, 30) for x in rules[-1][0])
            cur = set(mp.nstr(x, 30) for x in nodes)
            assert prev.issubset(cur)
        rules.append((list(nodes), weights))
        print(f"level {level}: {len(nodes)} nodes OK", file=sys.stderr)

    print("// Nested Gauss-Patterson quadrature tables on (-1,1), levels 0..8.")
    print("// Generated by scripts/gen_patterson.py (mpmath, 50 digits).")
    print("// Level l has 2^(l+1)-1 nodes; each level extends the previous one.")
    print()
    print("#include \"cdpf/quad/rules.hpp\"")
    print()
    print("namespace cdpf::quad::detail {")
    print()
    for level, (ns, ws) in enumerate(rules):
        print(f"const double kPattersonNodes{level}[] = {{")
        for x in ns:
            print(f"    {mp.nstr(x, 17, strip_zeros=False)},")
        print("};")
        print(f"const double kPattersonWeights{level}[] = {{")
        for w in ws:
            print(f"    {mp.nstr(w, 17, strip_zeros=False)},")
        print("};")
        print()
    print("const double* kPattersonNodes[] = {")
    for level in range(MAX_LEVEL + 1):
        print(f"    kPattersonNodes{level},")
    print("};")
    print("const double* kPattersonWeights[] = {")
    for level in range(MAX_LEVEL + 1):
        print(f"    kPattersonWeights{level},")
    print("};")
    print()
    print("}  // namespace cdpf::quad::detail")


if __name__ == "__main__":
    main()
