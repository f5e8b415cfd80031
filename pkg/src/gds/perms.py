"""Permutations as 0-based image tuples.

A permutation of degree n is a tuple ``p`` of length n with ``p[i]`` the
image of point ``i``.  Products compose left-to-right: ``pmul(p, q)`` applies
``p`` first, then ``q`` (so right coset actions are homomorphisms).
"""

from __future__ import annotations

from math import lcm

from .errors import InputError

Perm = tuple[int, ...]


def identity_perm(degree: int) -> Perm:
    return tuple(range(degree))


def pmul(p: Perm, q: Perm) -> Perm:
    """Product: apply p, then q."""
    return tuple(map(q.__getitem__, p))


def pinv(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, img in enumerate(p):
        out[img] = i
    return tuple(out)


def pconj(x: Perm, g: Perm) -> Perm:
    """Conjugate g^-1 * x * g."""
    return pmul(pmul(pinv(g), x), g)


def pcomm(a: Perm, b: Perm) -> Perm:
    """Commutator a^-1 * b^-1 * a * b."""
    return pmul(pmul(pmul(pinv(a), pinv(b)), a), b)


def perm_order(p: Perm) -> int:
    """Multiplicative order, via cycle lengths."""
    n = len(p)
    seen = [False] * n
    order = 1
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = p[i]
            length += 1
        order = lcm(order, length)
    return order


def is_involution_or_identity(p: Perm) -> bool:
    """True iff p*p is the identity (identity included)."""
    return all(p[p[i]] == i for i in range(len(p)))


def perm_from_one_based(images, degree: int) -> Perm:
    """Validate a 1-based image array and convert to a 0-based tuple."""
    arr = list(images)
    if len(arr) != degree:
        raise InputError(
            f"image array {arr!r} has length {len(arr)}, expected degree {degree}"
        )
    seen = set()
    for v in arr:
        if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= degree:
            raise InputError(
                f"image array {arr!r} is not a bijection of 1..{degree}: bad entry {v!r}"
            )
        seen.add(v)
    if len(seen) != degree:
        raise InputError(f"image array {arr!r} is not a bijection of 1..{degree}")
    return tuple(v - 1 for v in arr)


def perm_to_one_based(p: Perm) -> list[int]:
    return [v + 1 for v in p]


def perm_from_cycles(cycles, degree: int) -> Perm:
    """Build a permutation from 1-based disjoint cycles."""
    images = list(range(degree))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if not (1 <= a <= degree and 1 <= b <= degree):
                raise InputError(f"cycle {cyc!r} out of range for degree {degree}")
            images[a - 1] = b - 1
    p = tuple(images)
    if sorted(p) != list(range(degree)):
        raise InputError(f"cycles {cycles!r} are not disjoint")
    return p
