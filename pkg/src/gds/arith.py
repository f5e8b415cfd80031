"""Integer helpers: deterministic primality, factoring, prime powers."""

from __future__ import annotations

from math import isqrt

from .errors import FactorizationError

# Miller-Rabin with these witnesses is deterministic below this bound.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_LIMIT = 3_317_044_064_679_887_385_961_981


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == q:
            return True
        if n % q == 0:
            return False
    if n >= _MR_LIMIT:
        raise ValueError(f"{n} exceeds the deterministic primality range")
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = (x * x) % n
            if x == n - 1:
                break
        else:
            return False
    return True


def smallest_factor(n: int, budget: int | None = None) -> int:
    """Smallest prime factor of a composite n, by 6k+-1 trial division.

    `budget` caps the number of candidates tried; exceeding it raises
    FactorizationError rather than silently passing.
    """
    if n % 2 == 0:
        return 2
    if n % 3 == 0:
        return 3
    tried = 0
    f = 5
    while f * f <= n:
        if budget is not None and tried > budget:
            raise FactorizationError(f"factor search budget {budget} exhausted on {n}")
        if n % f == 0:
            return f
        if n % (f + 2) == 0:
            return f + 2
        f += 6
        tried += 1
    return n


def factorize(n: int, budget: int | None = None) -> dict[int, int]:
    """Prime factorization as {prime: exponent}."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    # shed tiny factors first so the primality test sees reduced cofactors
    for sp in (2, 3, 5, 7, 11, 13):
        while n % sp == 0:
            n //= sp
            out[sp] = out.get(sp, 0) + 1
    while n > 1:
        if is_prime(n):
            out[n] = out.get(n, 0) + 1
            break
        f = smallest_factor(n, budget=budget)
        while n % f == 0:
            n //= f
            out[f] = out.get(f, 0) + 1
    return out


def largest_prime_factor(n: int, budget: int | None = None) -> int:
    return max(factorize(n, budget=budget))


def _integer_root(n: int, k: int) -> int:
    x = int(round(n ** (1.0 / k))) or 1
    while x > 1 and x**k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def prime_power_base(n: int) -> int | None:
    """Return p when n = p^k for a prime p and k >= 1, else None."""
    if n < 2:
        return None
    for k in range(1, n.bit_length() + 1):
        root = _integer_root(n, k)
        if root >= 2 and root**k == n and is_prime(root):
            return root
    return None


def smallest_prime_congruent_one(modulus: int, lower_bound: int, search_cap: int = 10_000_000) -> int:
    """Smallest prime p with p = 1 (mod modulus) and p > lower_bound."""
    if modulus < 1:
        raise ValueError("modulus must be positive")
    m = max(1, (lower_bound // modulus) + 1)
    for step in range(search_cap):
        candidate = (m + step) * modulus + 1
        if candidate > lower_bound and is_prime(candidate):
            return candidate
    raise FactorizationError(
        f"no prime = 1 mod {modulus} above {lower_bound} within the search cap"
    )


def divisor_primes(n: int) -> list[int]:
    """Sorted prime divisors of n (n modest: trial division)."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out
