"""
Factorization of integer polynomials into irreducibles over Q.

The route is the classical one: strip content, reduce to the squarefree
part, factor that modulo a small prime (Berlekamp), Hensel-lift the modular
factors past a coefficient bound, and recombine subsets.  Degrees are
capped at 12, which covers every polynomial this package produces
(Chebyshev polynomials and Gram determinants at desk scale).
"""

from __future__ import annotations

from .poly import IntPoly, poly_gcd

MAX_FACTOR_DEGREE = 12

_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
           67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131)


def signed_content(p: IntPoly) -> int:
    """Content carrying the sign of the leading coefficient, so that
    p == signed_content(p) * p.primitive()."""
    c = p.content()
    return -c if p.lc < 0 else c


def factor_rational(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Irreducible factorization over Q.

    Returns (factor, multiplicity) pairs; factors are primitive with
    positive leading coefficient, sorted by (degree, coefficients).
    The input is recovered as signed_content(p) times the product.

    >>> [(str(f), m) for f, m in factor_rational(IntPoly([0, 0, -2, 0, 1]))]
    [('d', 2), ('d^2-2', 1)]
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if p.degree > MAX_FACTOR_DEGREE:
        raise ValueError(
            f"degree {p.degree} exceeds factorization bound {MAX_FACTOR_DEGREE}")
    prim = p.primitive()
    if prim.degree == 0:
        return []
    sqfree = prim.divexact(poly_gcd(prim, prim.derivative()))
    irreducibles = _factor_squarefree(sqfree.primitive())
    out = []
    rest = prim
    for q in irreducibles:
        mult = 0
        while True:
            try:
                nxt = rest.divexact(q)
            except ValueError:
                break
            rest = nxt
            mult += 1
        out.append((q, mult))
    if rest.degree != 0:
        raise AssertionError("factorization lost a factor")
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return out


def _factor_squarefree(f: IntPoly) -> list[IntPoly]:
    """Irreducible factors of a primitive squarefree polynomial."""
    if f.degree <= 0:
        return []
    if f.degree == 1:
        return [f.primitive()]

    # Monicize: F(x) = lc^(n-1) * f(x/lc) is monic over Z; factors of f are
    # recovered as primitive parts of G(lc * x).
    lc = f.lc
    n = f.degree
    F = IntPoly([c * lc ** (n - 1 - i)
                 for i, c in enumerate(f.coeffs[:-1])] + [1])
    assert F.lc == 1

    prime = _pick_prime(F)
    modular = _berlekamp(F, prime)
    if len(modular) == 1:
        return [f.primitive()]

    bound = _coeff_bound(F)
    exponent = 1
    modulus = prime
    while modulus <= 2 * bound:
        modulus *= prime
        exponent += 1
    lifted = _hensel_lift_list(F, modular, prime, exponent)
    factors_of_F = _recombine(F, lifted, prime ** exponent)

    out = []
    for G in factors_of_F:
        g = IntPoly([c * lc ** i for i, c in enumerate(G.coeffs)])
        out.append(g.primitive())
    return out


def _coeff_bound(F: IntPoly) -> int:
    # Mignotte-style bound on coefficients of any monic factor of monic F.
    norm = 0
    for c in F.coeffs:
        norm += c * c
    root = int(norm ** 0.5) + 1
    return 2 ** F.degree * root


def _pick_prime(F: IntPoly) -> int:
    for p in _PRIMES:
        if F.lc % p == 0:
            continue
        fp = [c % p for c in F.coeffs]
        dfp = [(i * c) % p for i, c in enumerate(F.coeffs)][1:]
        if _gfp_trim(dfp) and len(_gfp_gcd(fp, dfp, p)) == 1:
            return p
    raise ArithmeticError("no suitable prime found for factorization")


# ----------------------------------------------------------------------
# GF(p)[x] helpers; polynomials are lists of ints in [0, p), low degree
# first, trailing zeros stripped.

def _gfp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _gfp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _gfp_trim(out)


def _gfp_divmod(a, b, p):
    a = list(a)
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b):
        c = (a[-1] * inv) % p
        k = len(a) - len(b)
        q[k] = c
        for i, bi in enumerate(b):
            a[k + i] = (a[k + i] - c * bi) % p
        _gfp_trim(a)
    return _gfp_trim(q), a


def _gfp_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _gfp_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [(c * inv) % p for c in a]
    return a


def _gfp_powmod(base, e, mod, p):
    result = [1]
    base = _gfp_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _gfp_divmod(_gfp_mul(result, base, p), mod, p)[1]
        base = _gfp_divmod(_gfp_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _berlekamp(F: IntPoly, p: int) -> list[list[int]]:
    """Monic irreducible factors of F mod p (F squarefree mod p)."""
    f = [c % p for c in F.coeffs]
    n = len(f) - 1
    # Berlekamp matrix: rows are x^(i*p) mod f.
    rows = []
    xp = _gfp_powmod([0, 1], p, f, p)
    cur = [1]
    for i in range(n):
        row = cur + [0] * (n - len(cur))
        row[i] = (row[i] - 1) % p
        rows.append(row)
        cur = _gfp_divmod(_gfp_mul(cur, xp, p), f, p)[1]
    basis = _gfp_nullspace(rows, n, p)
    factors = [f]
    target = len(basis)
    for v in basis:
        if len(factors) == target:
            break
        vpoly = _gfp_trim(list(v))
        if len(vpoly) <= 1:
            continue  # the constant vector splits nothing
        new_factors = []
        for g in factors:
            if len(g) - 1 <= 1:
                new_factors.append(g)
                continue
            pieces = []
            remaining = g
            for c in range(p):
                if len(remaining) <= 1:
                    break
                shifted = list(vpoly)
                shifted[0] = (shifted[0] - c) % p
                h = _gfp_gcd(remaining, _gfp_trim(shifted), p)
                if 0 < len(h) - 1 < len(remaining) - 1:
                    pieces.append(h)
                    remaining = _gfp_divmod(remaining, h, p)[0]
            if len(remaining) > 1:
                pieces.append(remaining)
            new_factors.extend(pieces if pieces else [g])
        factors = new_factors
    return factors


def _gfp_nullspace(rows, n, p):
    """Nullspace basis of the n x n matrix over GF(p) given by rows."""
    m = [list(r) for r in rows]
    # Column-reduce the transpose: solve v * M = 0 for row vectors v.
    mat = [[m[i][j] for i in range(n)] for j in range(n)]  # transpose
    pivots = {}
    r = 0
    for c in range(n):
        pr = None
        for i in range(r, n):
            if mat[i][c]:
                pr = i
                break
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = pow(mat[r][c], p - 2, p)
        mat[r] = [(x * inv) % p for x in mat[r]]
        for i in range(n):
            if i != r and mat[i][c]:
                fac = mat[i][c]
                mat[i] = [(x - fac * y) % p for x, y in zip(mat[i], mat[r])]
        pivots[c] = r
        r += 1
    basis = []
    free = [c for c in range(n) if c not in pivots]
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for c, pr in pivots.items():
            v[c] = (-mat[pr][fc]) % p
        basis.append(v)
    return basis


# ----------------------------------------------------------------------
# Hensel lifting (monic case).

def _zm_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _zm_mul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % m
    return _zm_trim(out)


def _zm_divmod(a, b, m):
    """Division by b with lc(b) invertible mod m (here: b monic)."""
    a = [c % m for c in a]
    _zm_trim(a)
    inv = pow(b[-1], -1, m)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b):
        c = (a[-1] * inv) % m
        k = len(a) - len(b)
        q[k] = c
        for i, bi in enumerate(b):
            a[k + i] = (a[k + i] - c * bi) % m
        _zm_trim(a)
    return _zm_trim(q), a


def _zm_add(a, b, m):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % m
    return _zm_trim(out)


def _zm_sub(a, b, m):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % m
    return _zm_trim(out)


def _hensel_step(f, g, h, s, t, m):
    """One quadratic Hensel step: from f = g*h, s*g + t*h = 1 (mod m)
    to the same congruences mod m^2.  All of g, h monic."""
    m2 = m * m
    e = _zm_sub([c % m2 for c in f], _zm_mul(g, h, m2), m2)
    q, r = _zm_divmod(_zm_mul(s, e, m2), h, m2)
    g1 = _zm_add(g, _zm_add(_zm_mul(t, e, m2), _zm_mul(q, g, m2), m2), m2)
    h1 = _zm_add(h, r, m2)
    b = _zm_sub(_zm_add(_zm_mul(s, g1, m2), _zm_mul(t, h1, m2), m2), [1], m2)
    c, d = _zm_divmod(_zm_mul(s, b, m2), h1, m2)
    s1 = _zm_sub(s, d, m2)
    t1 = _zm_sub(t, _zm_add(_zm_mul(t, b, m2), _zm_mul(c, g1, m2), m2), m2)
    return g1, h1, s1, t1


def _gfp_bezout(g, h, p):
    """s, t with s*g + t*h = 1 mod p for coprime g, h."""
    r0, r1 = g, h
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _gfp_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _gfp_trim([(a - b) % p for a, b in
                                zip(s0 + [0] * len(_gfp_mul(q, s1, p)),
                                    _gfp_mul(q, s1, p) + [0] * len(s0))])
        t0, t1 = t1, _gfp_trim([(a - b) % p for a, b in
                                zip(t0 + [0] * len(_gfp_mul(q, t1, p)),
                                    _gfp_mul(q, t1, p) + [0] * len(t0))])
    inv = pow(r0[-1], p - 2, p)
    s = [(c * inv) % p for c in s0]
    t = [(c * inv) % p for c in t0]
    return _gfp_trim(s), _gfp_trim(t)


def _hensel_pair(f, g, h, p, exponent):
    """Lift f = g*h from mod p to mod p^(2^ceil) >= p^exponent."""
    s, t = _gfp_bezout(g, h, p)
    m = p
    g, h = list(g), list(h)
    while m < p ** exponent:
        g, h, s, t = _hensel_step(f, g, h, s, t, m)
        m = m * m
    return g, h


def _hensel_lift_list(F: IntPoly, modular: list[list[int]], p: int,
                      exponent: int) -> list[list[int]]:
    """Multifactor Hensel: lift all modular factors of monic F to p^exponent
    (or a power at least that large)."""
    f = list(F.coeffs)

    def lift(fcur, parts):
        if len(parts) == 1:
            return [fcur]
        half = len(parts) // 2
        g = [1]
        for q in parts[:half]:
            g = _gfp_mul(g, q, p)
        h = [1]
        for q in parts[half:]:
            h = _gfp_mul(h, q, p)
        G, H = _hensel_pair(fcur, g, h, p, exponent)
        return lift(G, parts[:half]) + lift(H, parts[half:])

    return lift(f, modular)


def _symmetric(a, m):
    half = m // 2
    return [c - m if c > half else c for c in a]


def _recombine(F: IntPoly, lifted: list[list[int]], modulus: int) -> list[IntPoly]:
    """Combine lifted modular factors into true integer factors of monic F."""
    from itertools import combinations
    remaining = list(range(len(lifted)))
    current = F
    out = []
    size = 1
    while 2 * size <= len(remaining):
        found = True
        while found and 2 * size <= len(remaining):
            found = False
            for subset in combinations(remaining, size):
                prod = [1]
                for i in subset:
                    prod = _zm_mul(prod, lifted[i], modulus)
                cand = IntPoly(_symmetric(prod, modulus))
                try:
                    quotient = current.divexact(cand)
                except ValueError:
                    continue
                out.append(cand)
                current = quotient
                remaining = [i for i in remaining if i not in subset]
                found = True
                break
        size += 1
    if current.degree > 0:
        out.append(current)
    return out
