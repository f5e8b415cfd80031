"""Builtin group constructions used to populate corpora.

Families: cyclic, dihedral, symmetric (n <= 6), alternating (n <= 6),
quaternion of order 8, the two extraspecial groups of order 27, the matrix
families SL/PSL/PGL(2, q) for q <= 13 and PSL(3, 3), and direct products of
any two of these.  Every builder asserts the expected order after
enumeration, so a wrong generator set fails loudly.
"""

from __future__ import annotations

from .arith import prime_power_base
from .errors import DomainError, InputError
from .groups import DEFAULT_ELEMENT_CAP, PermutationGroup, group_from_perms
from .perms import Perm, identity_perm, perm_from_cycles


# -- tiny finite fields ------------------------------------------------------


class GF:
    """Arithmetic in GF(q) for small q; elements are ints 0..q-1.

    Non-prime fields use polynomial representation with digits base p; the
    reducing polynomial is the lexicographically first irreducible one.
    """

    def __init__(self, q: int):
        p = prime_power_base(q)
        if p is None:
            raise DomainError(f"{q} is not a prime power")
        self.q = q
        self.p = p
        self.k = 1
        n = q
        while n > p:
            n //= p
            self.k += 1
        if self.k == 1:
            self._mul = lambda a, b: (a * b) % p
            self._add = lambda a, b: (a + b) % p
        else:
            poly = self._find_irreducible()
            add_table = {}
            mul_table = {}
            for a in range(q):
                for b in range(q):
                    add_table[(a, b)] = self._poly_add(a, b)
                    mul_table[(a, b)] = self._poly_mul(a, b, poly)
            self._add = lambda a, b: add_table[(a, b)]
            self._mul = lambda a, b: mul_table[(a, b)]

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def _undigits(self, ds) -> int:
        out = 0
        for d in reversed(ds[: self.k]):
            out = out * self.p + d
        return out

    def _poly_add(self, a: int, b: int) -> int:
        da, db = self._digits(a), self._digits(b)
        return self._undigits([(x + y) % self.p for x, y in zip(da, db)])

    def _poly_mul(self, a: int, b: int, reducer: list[int]) -> int:
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.k)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        # reduce by x^k = -reducer tail
        for i in range(2 * self.k - 1, self.k - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(self.k):
                    prod[i - self.k + j] = (prod[i - self.k + j] - c * reducer[j]) % self.p
        return self._undigits(prod)

    def _find_irreducible(self) -> list[int]:
        # monic x^k + tail; deg <= 3 is irreducible iff it has no roots
        for tail_code in range(self.p**self.k):
            tail = self._digits(tail_code)
            def value(x: int) -> int:
                acc = pow(x, self.k, self.p)
                for j, c in enumerate(tail):
                    acc = (acc + c * pow(x, j, self.p)) % self.p
                return acc
            if all(value(x) != 0 for x in range(self.p)):
                return tail
        raise AssertionError("no irreducible polynomial found")

    def add(self, a: int, b: int) -> int:
        return self._add(a, b)

    def mul(self, a: int, b: int) -> int:
        return self._mul(a, b)

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        return self._undigits([(-d) % self.p for d in self._digits(a)])

    def primitive_element(self) -> int:
        for g in range(1, self.q):
            seen = set()
            x = 1
            for _ in range(self.q - 1):
                seen.add(x)
                x = self.mul(x, g)
            if len(seen) == self.q - 1:
                return g
        raise AssertionError("no primitive element found")


# -- matrix actions ----------------------------------------------------------


def _row_action_perm(mat, points, index_of, field: GF, dim: int, projective: bool) -> Perm:
    """Permutation of projective or vector points under v -> v * mat."""
    images = []
    for v in points:
        w = tuple(
            _dot(v, [mat[i][j] for i in range(dim)], field) for j in range(dim)
        )
        if projective:
            w = _normalize(w, field)
        images.append(index_of[w])
    return tuple(images)


def _dot(v, col, field: GF) -> int:
    acc = 0
    for a, b in zip(v, col):
        acc = field.add(acc, field.mul(a, b))
    return acc


def _normalize(v, field: GF):
    """Scale a nonzero vector so its first nonzero coordinate is 1."""
    lead = next((x for x in v if x != 0), None)
    if lead is None:
        return v
    if lead == 1:
        return v
    inv = next(c for c in range(1, field.q) if field.mul(lead, c) == 1)
    return tuple(field.mul(inv, x) for x in v)


def _projective_points(field: GF, dim: int):
    pts = sorted(
        {
            _normalize(v, field)
            for v in _all_vectors(field.q, dim)
            if any(v)
        }
    )
    return pts, {v: i for i, v in enumerate(pts)}


def _vector_points(field: GF, dim: int):
    pts = [v for v in _all_vectors(field.q, dim) if any(v)]
    return pts, {v: i for i, v in enumerate(pts)}


def _all_vectors(q: int, dim: int):
    out = [()]
    for _ in range(dim):
        out = [v + (c,) for v in out for c in range(q)]
    return sorted(out)


def _sl2_generators(field: GF):
    """Transvections spanning the additive group, plus the Weyl element."""
    q = field.q
    gens = []
    basis = [1]
    g = field.primitive_element()
    x = 1
    for _ in range(1, field.k):
        x = field.mul(x, g)
        basis.append(x)
    for b in basis:
        gens.append(((1, b), (0, 1)))
    gens.append(((0, 1), (field.neg(1), 0)))
    return gens


def sl2(q: int, cap: int = DEFAULT_ELEMENT_CAP) -> PermutationGroup:
    """SL(2, q) acting faithfully on the nonzero vectors of F_q^2."""
    if q > 13:
        raise DomainError(f"matrix families are capped at q <= 13, got {q}")
    field = GF(q)
    points, index_of = _vector_points(field, 2)
    gens = [
        _row_action_perm(m, points, index_of, field, 2, projective=False)
        for m in _sl2_generators(field)
    ]
    G = group_from_perms(len(points), gens, name=f"SL(2,{q})", cap=cap)
    expected = q * (q * q - 1)
    if G.order != expected:
        raise AssertionError(f"SL(2,{q}) came out with order {G.order}, want {expected}")
    return G


def psl2(q: int, cap: int = DEFAULT_ELEMENT_CAP) -> PermutationGroup:
    """PSL(2, q) acting on the q + 1 points of the projective line."""
    if q < 4:
        raise DomainError(f"PSL(2,{q}) is not simple; q must be at least 4")
    if q > 13:
        raise DomainError(f"matrix families are capped at q <= 13, got {q}")
    field = GF(q)
    points, index_of = _projective_points(field, 2)
    gens = [
        _row_action_perm(m, points, index_of, field, 2, projective=True)
        for m in _sl2_generators(field)
    ]
    G = group_from_perms(len(points), gens, name=f"PSL(2,{q})", cap=cap)
    expected = q * (q * q - 1) // (2 if q % 2 else 1)
    if G.order != expected:
        raise AssertionError(f"PSL(2,{q}) came out with order {G.order}, want {expected}")
    return G


def pgl2(q: int, cap: int = DEFAULT_ELEMENT_CAP) -> PermutationGroup:
    """PGL(2, q) on the projective line (equals PSL for even q)."""
    if q > 13:
        raise DomainError(f"matrix families are capped at q <= 13, got {q}")
    field = GF(q)
    points, index_of = _projective_points(field, 2)
    mats = _sl2_generators(field) + [((field.primitive_element(), 0), (0, 1))]
    gens = [_row_action_perm(m, points, index_of, field, 2, projective=True) for m in mats]
    G = group_from_perms(len(points), gens, name=f"PGL(2,{q})", cap=cap)
    expected = q * (q * q - 1)
    if G.order != expected:
        raise AssertionError(f"PGL(2,{q}) came out with order {G.order}, want {expected}")
    return G


def psl3_3(cap: int = DEFAULT_ELEMENT_CAP) -> PermutationGroup:
    """PSL(3, 3) = SL(3, 3) acting on the 13 points of the projective plane."""
    field = GF(3)
    points, index_of = _projective_points(field, 3)
    transvection = ((1, 1, 0), (0, 1, 0), (0, 0, 1))
    cycle = ((0, 0, 1), (1, 0, 0), (0, 1, 0))
    gens = [
        _row_action_perm(m, points, index_of, field, 3, projective=True)
        for m in (transvection, cycle)
    ]
    G = group_from_perms(len(points), gens, name="PSL(3,3)", cap=cap)
    if G.order != 5616:
        raise AssertionError(f"PSL(3,3) came out with order {G.order}, want 5616")
    return G


# -- small named families ----------------------------------------------------


def cyclic(n: int) -> PermutationGroup:
    if n < 1:
        raise DomainError("cyclic group order must be positive")
    if n == 1:
        return group_from_perms(1, [], name="C1")
    gen = tuple(list(range(1, n)) + [0])
    G = group_from_perms(n, [gen], name=f"C{n}")
    assert G.order == n
    return G


def dihedral(n: int) -> PermutationGroup:
    """Dihedral group of order 2n acting on an n-gon (n >= 3)."""
    if n < 3:
        raise DomainError("dihedral builder needs n >= 3 polygon vertices")
    rot = tuple(list(range(1, n)) + [0])
    refl = tuple([0] + list(range(n - 1, 0, -1)))
    G = group_from_perms(n, [rot, refl], name=f"D{2 * n}")
    assert G.order == 2 * n
    return G


def symmetric(n: int) -> PermutationGroup:
    if not 2 <= n <= 6:
        raise DomainError("symmetric builder supports 2 <= n <= 6")
    cycle = tuple(list(range(1, n)) + [0])
    swap = tuple([1, 0] + list(range(2, n)))
    G = group_from_perms(n, [swap, cycle], name=f"S{n}")
    import math

    assert G.order == math.factorial(n)
    return G


def alternating(n: int) -> PermutationGroup:
    if not 3 <= n <= 6:
        raise DomainError("alternating builder supports 3 <= n <= 6")
    three_cycle = perm_from_cycles([[1, 2, 3]], n)
    if n % 2 == 1:
        big = perm_from_cycles([list(range(1, n + 1))], n)
    else:
        big = perm_from_cycles([list(range(2, n + 1))], n)
    G = group_from_perms(n, [three_cycle, big], name=f"A{n}")
    import math

    assert G.order == math.factorial(n) // 2
    return G


def _regular_representation(elements, mul, gens, name: str) -> PermutationGroup:
    """Right regular permutation representation of an abstract group."""
    index_of = {x: i for i, x in enumerate(elements)}
    perms = [tuple(index_of[mul(x, g)] for x in elements) for g in gens]
    G = group_from_perms(len(elements), perms, name=name)
    assert G.order == len(elements)
    return G


def quaternion8() -> PermutationGroup:
    # elements encoded as (sign, axis) with axes 1, i, j, k
    axis_mul = {
        (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
        (1, 0): (0, 1), (2, 0): (0, 2), (3, 0): (0, 3),
        (1, 1): (1, 0), (2, 2): (1, 0), (3, 3): (1, 0),
        (1, 2): (0, 3), (2, 1): (1, 3),
        (2, 3): (0, 1), (3, 2): (1, 1),
        (3, 1): (0, 2), (1, 3): (1, 2),
    }

    def mul(a, b):
        (sa, aa), (sb, ab) = a, b
        s, ax = axis_mul[(aa, ab)]
        return ((sa + sb + s) % 2, ax)

    elements = [(s, ax) for ax in range(4) for s in range(2)]
    return _regular_representation(elements, mul, [(0, 1), (0, 2)], "Q8")


def extraspecial27(exponent: int) -> PermutationGroup:
    """The two extraspecial groups of order 27, by exponent (3 or 9)."""
    if exponent == 3:
        # Heisenberg group over F_3
        def mul(x, y):
            (a, b, c), (d, e, f) = x, y
            return ((a + d) % 3, (b + e) % 3, (c + f + a * e) % 3)

        elements = [(a, b, c) for a in range(3) for b in range(3) for c in range(3)]
        G = _regular_representation(elements, mul, [(1, 0, 0), (0, 1, 0)], "E27_3")
    elif exponent == 9:
        # order-9 element a, order-3 element b with b^-1 a b = a^4
        def mul(x, y):
            (i, j), (k, l) = x, y
            return ((i + k * pow(4, j, 9)) % 9, (j + l) % 3)

        elements = [(i, j) for i in range(9) for j in range(3)]
        G = _regular_representation(elements, mul, [(1, 0), (0, 1)], "E27_9")
    else:
        raise DomainError("extraspecial order-27 exponent must be 3 or 9")
    assert G.order == 27 and G.center().order == 3 and G.exponent() == exponent
    return G


def direct_product(A: PermutationGroup, B: PermutationGroup, name: str | None = None,
                   cap: int = DEFAULT_ELEMENT_CAP) -> PermutationGroup:
    """Direct product acting on the disjoint union of the two point sets."""
    n, m = A.degree, B.degree
    gens = []
    for g in A.generators:
        gens.append(tuple(list(g) + [n + i for i in range(m)]))
    for h in B.generators:
        gens.append(tuple(list(range(n)) + [n + x for x in h]))
    G = group_from_perms(n + m, gens, name=name or f"{A.name}x{B.name}", cap=cap)
    if G.order != A.order * B.order:
        raise AssertionError("direct product order mismatch")
    return G


# -- spec-string entry point ---------------------------------------------


def builtin_group(spec: str, cap: int = DEFAULT_ELEMENT_CAP) -> PermutationGroup:
    """Build a group from a spec string such as ``symmetric:4`` or
    ``product:alternating:5,cyclic:2``."""
    spec = spec.strip()
    if spec.startswith("product:"):
        body = spec[len("product:") :]
        parts = body.split(",")
        if len(parts) != 2:
            raise InputError(f"product spec needs exactly two factors: {spec!r}")
        return direct_product(
            builtin_group(parts[0], cap=cap), builtin_group(parts[1], cap=cap), cap=cap
        )
    fields = spec.split(":")
    kind = fields[0]
    try:
        args = [int(x) for x in fields[1:]]
    except ValueError as exc:
        raise InputError(f"bad builtin spec {spec!r}") from exc
    try:
        if kind == "cyclic" and len(args) == 1:
            return cyclic(args[0])
        if kind == "dihedral" and len(args) == 1:
            return dihedral(args[0])
        if kind == "symmetric" and len(args) == 1:
            return symmetric(args[0])
        if kind == "alternating" and len(args) == 1:
            return alternating(args[0])
        if kind == "quaternion" and args == [8]:
            return quaternion8()
        if kind == "extraspecial" and len(args) == 2 and args[0] == 27:
            return extraspecial27(args[1])
        if kind == "sl2" and len(args) == 1:
            return sl2(args[0], cap=cap)
        if kind == "psl2" and len(args) == 1:
            return psl2(args[0], cap=cap)
        if kind == "pgl2" and len(args) == 1:
            return pgl2(args[0], cap=cap)
        if kind == "psl3" and args == [3]:
            return psl3_3(cap=cap)
    except DomainError:
        raise
    raise InputError(f"unknown builtin spec {spec!r}")
