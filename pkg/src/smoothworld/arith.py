"""Exact arithmetic over a fixed finite prime base.

Trial-division factorization over the base, enumeration of base-smooth
integers, the exponent-residue coloring that drives every monochromatic
search in this package, and exact integer n-th roots. All arithmetic is
arbitrary-precision; nothing here rounds or truncates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, UsageError

MAX_BASE_PRIMES = 16
MAX_EXPONENT = 16
MAX_LIMIT = 2**40

# Miller-Rabin with these witnesses is deterministic below this bound.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_CERTIFIED_BOUND = 3_317_044_064_679_887_385_961_981


def is_prime(n: int) -> bool:
    """Deterministic primality check for n below ~3.3e24."""
    if n >= _MR_CERTIFIED_BOUND:
        raise DomainError(f"primality check not certified for {n}")
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeBase:
    """Strictly ascending tuple of distinct primes p_1 < ... < p_k, k <= 16."""

    primes: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "primes", tuple(int(p) for p in self.primes))
        k = len(self.primes)
        if not 1 <= k <= MAX_BASE_PRIMES:
            raise UsageError(f"base size must be in [1, {MAX_BASE_PRIMES}], got {k}")
        if any(b <= a for a, b in zip(self.primes, self.primes[1:])):
            raise UsageError(f"base primes must be strictly ascending: {list(self.primes)}")
        for p in self.primes:
            if not is_prime(p):
                raise UsageError(f"{p} is not prime")

    @property
    def k(self) -> int:
        return len(self.primes)

    @classmethod
    def first(cls, k: int) -> "PrimeBase":
        """The base made of the first k primes."""
        found: list[int] = []
        candidate = 2
        while len(found) < k:
            if is_prime(candidate):
                found.append(candidate)
            candidate += 1
        return cls(tuple(found))


@dataclass(frozen=True)
class Factorization:
    """Exponents over the base plus the base-coprime cofactor (1 means smooth)."""

    exponents: tuple[int, ...]
    cofactor: int

    @property
    def is_smooth(self) -> bool:
        return self.cofactor == 1


@dataclass(frozen=True)
class ResidueColor:
    """Exponent residues mod `modulus`, or the non-smooth sentinel (residues=None).

    The sentinel extends the natural palette of size modulus**k by one color
    so that the coloring is total on the integers: sums of smooth numbers
    need not be smooth.
    """

    residues: tuple[int, ...] | None
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise DomainError(f"modulus must be >= 1, got {self.modulus}")
        if self.residues is not None:
            object.__setattr__(self, "residues", tuple(int(r) for r in self.residues))
            if any(not 0 <= r < self.modulus for r in self.residues):
                raise DomainError(f"residues must lie in [0, {self.modulus})")

    @property
    def is_smooth(self) -> bool:
        return self.residues is not None

    @classmethod
    def non_smooth(cls, modulus: int) -> "ResidueColor":
        return cls(None, modulus)


@dataclass(frozen=True)
class SmoothDecomposition:
    """m = q**n * r_part with r_part n-th-power-free over the base."""

    m: int
    q: int
    r_part: int
    color: ResidueColor


def _check_exponent(n: int) -> None:
    if not 1 <= n <= MAX_EXPONENT:
        raise UsageError(f"exponent must be in [1, {MAX_EXPONENT}], got {n}")


def _check_limit(limit: int) -> None:
    if not 1 <= limit <= MAX_LIMIT:
        raise UsageError(f"limit must be in [1, 2**40], got {limit}")


def factor_over_base(m: int, base: PrimeBase) -> Factorization:
    """Factor m by trial division over the base; the cofactor collects the rest."""
    if m < 1:
        raise DomainError(f"m must be positive, got {m}")
    exps = []
    rest = m
    for p in base.primes:
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        exps.append(e)
    return Factorization(tuple(exps), rest)


def decompose(m: int, base: PrimeBase, n: int) -> SmoothDecomposition | None:
    """Split smooth m as q**n * r_part with every exponent of r_part below n.

    Returns None exactly when m is not smooth over the base.
    """
    _check_exponent(n)
    fact = factor_over_base(m, base)
    if not fact.is_smooth:
        return None
    q = 1
    r_part = 1
    residues = []
    for p, e in zip(base.primes, fact.exponents):
        quot, rem = divmod(e, n)
        q *= p**quot
        r_part *= p**rem
        residues.append(rem)
    return SmoothDecomposition(m, q, r_part, ResidueColor(tuple(residues), n))


def color_of(m: int, base: PrimeBase, n: int) -> ResidueColor:
    """Exponent-residue color of m; the sentinel when m is not smooth."""
    _check_exponent(n)
    fact = factor_over_base(m, base)
    if not fact.is_smooth:
        return ResidueColor.non_smooth(n)
    return ResidueColor(tuple(e % n for e in fact.exponents), n)


def power_multiplier(color: ResidueColor, base: PrimeBase, n: int) -> int:
    """Constant P = prod p_i**(n - r_i): P*m is an exact n-th power for every
    smooth m of this color."""
    _check_exponent(n)
    if not color.is_smooth:
        raise DomainError("power multiplier requires a smooth color")
    if color.modulus != n or len(color.residues) != base.k:
        raise DomainError("color does not match the given base and exponent")
    p_mult = 1
    for p, r in zip(base.primes, color.residues):
        p_mult *= p ** (n - r)
    return p_mult


def enumerate_smooth(base: PrimeBase, limit: int) -> list[int]:
    """All base-smooth integers <= limit, ascending, starting at 1."""
    _check_limit(limit)
    values = [1]
    for p in base.primes:
        grown = []
        for v in values:
            w = v * p
            while w <= limit:
                grown.append(w)
                w *= p
        values.extend(grown)
    values.sort()
    return values


def nth_root_floor(v: int, n: int) -> int:
    """Largest integer r with r**n <= v, computed exactly."""
    if v < 1:
        raise DomainError(f"root argument must be positive, got {v}")
    if n < 1:
        raise DomainError(f"root degree must be >= 1, got {n}")
    if n == 1 or v == 1:
        return v if n == 1 else 1
    if n == 2:
        return math.isqrt(v)
    x = 1 << -(-v.bit_length() // n)
    while True:
        y = ((n - 1) * x + v // x ** (n - 1)) // n
        if y >= x:
            break
        x = y
    while x**n > v:
        x -= 1
    while (x + 1) ** n <= v:
        x += 1
    return x


def nth_root_exact(v: int, n: int) -> int | None:
    """The integer r with r**n == v, or None when v is not an n-th power."""
    r = nth_root_floor(v, n)
    return r if r**n == v else None


def palette_size(base: PrimeBase, n: int) -> int:
    """Number of colors: n**k smooth colors plus the non-smooth sentinel."""
    _check_exponent(n)
    return n**base.k + 1


def palette_index(color: ResidueColor, base: PrimeBase) -> int:
    """Deterministic index of a color: mixed-radix over residues, sentinel last."""
    n = color.modulus
    if not color.is_smooth:
        return n**base.k
    if len(color.residues) != base.k:
        raise DomainError("color width does not match base size")
    return sum(r * n**i for i, r in enumerate(color.residues))


def color_from_index(index: int, base: PrimeBase, n: int) -> ResidueColor:
    """Inverse of palette_index."""
    _check_exponent(n)
    size = palette_size(base, n)
    if not 0 <= index < size:
        raise DomainError(f"palette index {index} out of range [0, {size})")
    if index == size - 1:
        return ResidueColor.non_smooth(n)
    residues = []
    for _ in range(base.k):
        index, r = divmod(index, n)
        residues.append(r)
    return ResidueColor(tuple(residues), n)
