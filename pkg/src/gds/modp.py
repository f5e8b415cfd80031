"""Dense linear algebra and polynomial arithmetic over a prime field F_p.

Matrices are lists of row lists of ints in [0, p).  Polynomials are coefficient
lists, lowest degree first, normalized so the last entry is nonzero (the zero
polynomial is the empty list).
"""

from __future__ import annotations


def mat_vec(M, v, p):
    return [sum(row[j] * v[j] for j in range(len(v))) % p for row in M]


def rref(rows, p):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] % p != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] % p != 0:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(M, p):
    """Basis (RREF rows) of {v : M v = 0}."""
    n = len(M[0]) if M else 0
    reduced, pivots = rref(M, p)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-reduced[r][fc]) % p
        basis.append(v)
    rows, _ = rref(basis, p)
    return rows


# -- polynomials -----------------------------------------------------------


def poly_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return poly_trim(out)


def poly_divmod(f, g, p):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    dg = len(g) - 1
    lead_inv = pow(g[-1], p - 2, p)
    q = [0] * max(0, len(f) - dg)
    while len(f) - 1 >= dg and f:
        shift = len(f) - 1 - dg
        factor = (f[-1] * lead_inv) % p
        if factor:
            q[shift] = factor
            for i, b in enumerate(g):
                f[shift + i] = (f[shift + i] - factor * b) % p
        poly_trim(f)
        if not f:
            break
    return poly_trim(q), f


def poly_monic(f, p):
    if not f:
        return []
    inv = pow(f[-1], p - 2, p)
    return [(a * inv) % p for a in f]


def poly_gcd(f, g, p):
    a, b = list(f), list(g)
    while b:
        a, b = b, poly_divmod(a, b, p)[1]
    return poly_monic(a, p)


def poly_deriv(f, p):
    return poly_trim([(i * a) % p for i, a in enumerate(f)][1:])


def poly_powmod(base, e, mod, p):
    """base^e reduced mod the polynomial `mod`."""
    result = [1]
    b = poly_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = poly_divmod(poly_mul(result, b, p), mod, p)[1]
        b = poly_divmod(poly_mul(b, b, p), mod, p)[1]
        e >>= 1
    return result


def poly_lcm(f, g, p):
    if not f or not g:
        return []
    return poly_monic(poly_divmod(poly_mul(f, g, p), poly_gcd(f, g, p), p)[0], p)


def minimal_polynomial(M, p):
    """Monic minimal polynomial of a square matrix over F_p.

    Takes the lcm of the local minimal polynomials of the standard basis
    vectors, found by Gaussian elimination over growing Krylov sequences.
    """
    d = len(M)
    minpoly = [1]
    for seed in range(d):
        if len(minpoly) - 1 == d:
            break
        v = [0] * d
        v[seed] = 1
        # reduce v against the Krylov space accumulated so far
        krylov_rows: list[tuple[list[int], list[int]]] = []  # (vector, combo)
        combo = [1]
        while True:
            vec = list(v)
            comb = list(combo)
            for kvec, kcomb in krylov_rows:
                lead = next((i for i, x in enumerate(kvec) if x), None)
                if lead is not None and vec[lead]:
                    f = vec[lead]
                    vec = [(a - f * b) % p for a, b in zip(vec, kvec)]
                    width = max(len(comb), len(kcomb))
                    ca = comb + [0] * (width - len(comb))
                    cb = kcomb + [0] * (width - len(kcomb))
                    comb = [(a - f * b) % p for a, b in zip(ca, cb)]
            if not any(vec):
                local = poly_monic(poly_trim(comb), p)
                minpoly = poly_lcm(minpoly, local, p)
                break
            # normalize the new row and store
            lead = next(i for i, x in enumerate(vec) if x)
            inv = pow(vec[lead], p - 2, p)
            krylov_rows.append(
                ([(x * inv) % p for x in vec], [(x * inv) % p for x in comb])
            )
            v = mat_vec(M, v, p)
            combo = [0] + combo
    return minpoly


def roots_of_split_poly(f, p):
    """All roots in F_p of a polynomial known to split over F_p, sorted.

    Splits recursively with gcd(f, (x+a)^((p-1)/2) - 1) for a = 0, 1, 2, ...
    which is deterministic and fast once a separating shift is found.
    """
    f = poly_monic(list(f), p)
    if len(f) <= 1:
        return []
    deriv = poly_deriv(f, p)
    if deriv:
        f = poly_divmod(f, poly_gcd(f, deriv, p), p)[0]
    roots: list[int] = []
    stack = [f]
    while stack:
        g = stack.pop()
        if len(g) == 2:
            roots.append((-g[0] * pow(g[1], p - 2, p)) % p)
            continue
        if len(g) <= 1:
            continue
        if g[0] == 0:
            roots.append(0)
            g = poly_divmod(g, [0, 1], p)[0]
            stack.append(g)
            continue
        found = False
        for a in range(2 * p):
            t = poly_powmod([a, 1], (p - 1) // 2, g, p)
            if t:
                t = poly_trim([(t[0] - 1) % p] + t[1:])
            else:
                t = [p - 1]
            h = poly_gcd(g, t, p)
            if 0 < len(h) - 1 < len(g) - 1:
                stack.append(h)
                stack.append(poly_divmod(g, h, p)[0])
                found = True
                break
        if not found:
            raise ArithmeticError("polynomial did not split over F_p")
    return sorted(roots)
