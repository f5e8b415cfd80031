"""Irreducible character degrees and tables over a prime field.

Character values are stored as residues modulo a prime p chosen with
p = 1 (mod exp(G)) and p > 2|G|.  Every consumer needs only integers that are
recoverable from such residues (degrees, restriction multiplicities), so no
cyclotomic arithmetic is required.

The table is found by simultaneously diagonalizing the class-multiplication
matrices of the center of the group algebra over F_p: each irreducible
character contributes one common eigenvector of central-character values.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import smallest_prime_congruent_one
from .errors import ConfigError, DomainError, FactorizationError
from .groups import PermutationGroup, Subgroup
from .modp import (
    mat_vec,
    minimal_polynomial,
    nullspace,
    roots_of_split_poly,
    rref,
)
from .perms import pinv, pmul


@dataclass(frozen=True)
class CharacterData:
    """Character table of one group, as residues mod a fixed prime."""

    group: PermutationGroup
    modulus: int
    degrees: tuple[int, ...]
    table: tuple[tuple[int, ...], ...]
    primitive_root_order: int  # exponent of the group

    @property
    def class_count(self) -> int:
        return len(self.table)

    def validate(self) -> None:
        G = self.group
        k = G.class_count()
        if len(self.table) != k or any(len(row) != k for row in self.table):
            raise AssertionError("table must be k x k")
        if sum(d * d for d in self.degrees) != G.order:
            raise AssertionError("degree squares must sum to the group order")
        if tuple(row[0] for row in self.table) != self.degrees:
            raise AssertionError("first column must equal the degrees")
        classes = G.conjugacy_classes()
        sizes = classes.sizes()
        inv = [classes.inverse_class(j) for j in range(k)]
        p = self.modulus
        for r in range(k):
            for s in range(k):
                total = (
                    sum(
                        sizes[j] * self.table[r][j] * self.table[s][inv[j]]
                        for j in range(k)
                    )
                    % p
                )
                expected = G.order % p if r == s else 0
                if total != expected:
                    raise AssertionError(f"row orthogonality failed at ({r},{s})")


def choose_modulus(G: PermutationGroup) -> int:
    """Smallest prime p = 1 (mod exp(G)) with p > 2|G|."""
    try:
        return smallest_prime_congruent_one(G.exponent(), 2 * G.order)
    except FactorizationError as exc:
        raise ConfigError(str(exc)) from exc


def class_matrix(G: PermutationGroup, i: int) -> list[list[int]]:
    """Integer matrix M with M[j][l] = #{x in C_i : x^-1 z_l in C_j}.

    Acting on a vector of central-character values, M scales it by the value
    at class i.
    """
    classes = G.conjugacy_classes()
    k = classes.count
    reps = classes.representatives
    index_of = classes.index_of
    M = [[0] * k for _ in range(k)]
    for x in classes.classes[i]:
        xi = pinv(x)
        for l, z in enumerate(reps):
            M[index_of[pmul(xi, z)]][l] += 1
    return M


def _central_character_vectors(G: PermutationGroup, p: int) -> list[list[int]]:
    """All k central-character vectors over F_p, normalized to 1 at class 0."""
    k = G.class_count()
    if k == 1:
        return [[1]]
    subspaces: list[list[list[int]]] = [[_unit(k, j) for j in range(k)]]
    for i in range(1, k):
        if all(len(base) == 1 for base in subspaces):
            break
        M = [[v % p for v in row] for row in class_matrix(G, i)]
        refined: list[list[list[int]]] = []
        for base in subspaces:
            if len(base) == 1:
                refined.append(base)
                continue
            refined.extend(_split_subspace(M, base, p))
        subspaces = refined
    if any(len(base) != 1 for base in subspaces):
        raise AssertionError("class matrices failed to separate the characters")
    vectors = []
    for base in subspaces:
        v = base[0]
        if v[0] % p == 0:
            raise AssertionError("central character vanishes at the identity class")
        scale = pow(v[0], p - 2, p)
        vectors.append([(x * scale) % p for x in v])
    return vectors


def _unit(k: int, j: int) -> list[int]:
    v = [0] * k
    v[j] = 1
    return v


def _split_subspace(M, base, p):
    """Split an invariant subspace (basis in RREF) into eigenspaces of M."""
    d = len(base)
    # restriction R: M b_t = sum_s R[s][t] b_s, read off at the pivot columns
    pivots = [next(i for i, x in enumerate(b) if x) for b in base]
    images = [mat_vec(M, b, p) for b in base]
    R = [[images[t][pivots[s]] for t in range(d)] for s in range(d)]
    for t in range(d):
        recon = [0] * len(base[0])
        for s in range(d):
            coeff = R[s][t]
            if coeff:
                recon = [(a + coeff * b) % p for a, b in zip(recon, base[s])]
        if recon != images[t]:
            raise AssertionError("subspace is not invariant under a class matrix")
    eigenvalues = roots_of_split_poly(minimal_polynomial(R, p), p)
    if len(eigenvalues) == 1:
        return [base]
    out = []
    for lam in eigenvalues:
        shifted = [
            [(R[s][t] - (lam if s == t else 0)) % p for t in range(d)]
            for s in range(d)
        ]
        block = []
        for coeffs in nullspace(shifted, p):
            vec = [0] * len(base[0])
            for t, c in enumerate(coeffs):
                if c:
                    vec = [(a + c * b) % p for a, b in zip(vec, base[t])]
            block.append(vec)
        block_rref, _ = rref(block, p)
        out.append(block_rref)
    if sum(len(b) for b in out) != d:
        raise AssertionError("eigenspace dimensions do not add up")
    return out


def character_table_mod_p(
    G: PermutationGroup, prime: int | None = None
) -> CharacterData:
    """Full character table of G with values as residues mod a prime.

    Rows are sorted by degree, then by residue vector, so the output is
    deterministic.  The chosen prime may be overridden (e.g. to share a
    modulus between a group and a normal subgroup).
    """
    exponent = G.exponent()
    if prime is None:
        p = choose_modulus(G)
    else:
        p = prime
        if p <= 2 * G.order or (p - 1) % exponent != 0:
            raise DomainError(
                f"modulus {p} unusable: need p > 2|G| and p = 1 mod exp(G) = {exponent}"
            )
    cached = G._char_cache.get(p)
    if cached is not None:
        return cached  # type: ignore[return-value]
    classes = G.conjugacy_classes()
    k = classes.count
    sizes = classes.sizes()
    inv_class = [classes.inverse_class(j) for j in range(k)]
    size_inv = [pow(s, p - 2, p) for s in sizes]
    rows = []
    for omega in _central_character_vectors(G, p):
        s = sum(omega[j] * omega[inv_class[j]] * size_inv[j] for j in range(k)) % p
        d_squared = (G.order * pow(s, p - 2, p)) % p
        degree = _degree_from_square(d_squared, G.order, p)
        row = tuple((degree * omega[j] * size_inv[j]) % p for j in range(k))
        rows.append((degree, row))
    rows.sort()
    data = CharacterData(
        group=G,
        modulus=p,
        degrees=tuple(d for d, _ in rows),
        table=tuple(row for _, row in rows),
        primitive_root_order=exponent,
    )
    data.validate()
    G._char_cache[p] = data
    return data


def _degree_from_square(d_squared: int, order: int, p: int) -> int:
    d = 1
    while d * d <= order:
        if (d * d) % p == d_squared:
            return d
        d += 1
    raise AssertionError("no integer degree matches the computed square")


def character_degrees(G: PermutationGroup) -> tuple[int, ...]:
    """Multiset of irreducible degrees, sorted ascending."""
    if G.is_abelian():
        # k = |G| forces every degree to be 1
        return tuple([1] * G.order)
    return character_table_mod_p(G).degrees


def degree_sum(degrees) -> int:
    return sum(degrees)


def restriction_multiplicities(
    G: PermutationGroup,
    N: Subgroup,
    chars_G: CharacterData,
    chars_N: CharacterData,
) -> list[list[int]]:
    """Exact integer matrix of multiplicities of chars of N in restrictions.

    Entry (i, j) is the multiplicity of the j-th irreducible character of N
    in the restriction of the i-th irreducible character of G.
    """
    if chars_G.modulus != chars_N.modulus:
        raise DomainError("character tables must share a modulus")
    if N.parent is not G:
        raise DomainError("subgroup does not belong to this group")
    if not N.normal:
        raise DomainError(f"{N.name} is not normal in {G.name}")
    p = chars_G.modulus
    H = chars_N.group
    classes_N = H.conjugacy_classes()
    classes_G = G.conjugacy_classes()
    kN = classes_N.count
    sizes_N = classes_N.sizes()
    inv_N = [classes_N.inverse_class(j) for j in range(kN)]
    fusion = [classes_G.index_of[rep] for rep in classes_N.representatives]
    n_inv = pow(H.order % p, p - 2, p)
    out = []
    for i, chi in enumerate(chars_G.table):
        row = []
        for j in range(kN):
            total = (
                sum(
                    sizes_N[jp] * chi[fusion[jp]] * chars_N.table[j][inv_N[jp]]
                    for jp in range(kN)
                )
                % p
            )
            row.append((total * n_inv) % p)
        if sum(m * chars_N.degrees[j] for j, m in enumerate(row)) != chars_G.degrees[i]:
            raise AssertionError("restriction multiplicities do not add to the degree")
        out.append(row)
    return out


def subgroup_character_data(
    G: PermutationGroup, N: Subgroup, prime: int
) -> CharacterData:
    """Character table of a normal subgroup, computed at the parent's prime."""
    return character_table_mod_p(N.as_group(), prime=prime)
