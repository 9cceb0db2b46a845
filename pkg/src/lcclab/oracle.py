"""Brute-force reference implementations used to check protocol outputs.

Everything here is a naive loop on purpose: these functions share no code
with the protocol builders, so agreement between the two is meaningful.
"""

from __future__ import annotations

from .errors import DivisionByZero, KOutOfRange, NotPrime


def popcount_prefix(bits: "list[int] | str", k: int) -> int:
    """Number of 1s among the first k bits."""
    if not 1 <= k <= len(bits):
        raise KOutOfRange(f"k={k} outside 1..{len(bits)}")
    total = 0
    for i in range(k):
        if int(bits[i]) == 1:
            total += 1
    return total


def threshold(bits: "list[int] | str", k: int) -> int:
    """1 iff at least k of the bits are 1."""
    if not 1 <= k <= len(bits):
        raise KOutOfRange(f"k={k} outside 1..{len(bits)}")
    count = 0
    for b in bits:
        if int(b) == 1:
            count += 1
    return 1 if count >= k else 0


def sorted_bits(bits: "list[int] | str") -> list[int]:
    """All the 1s first, then the 0s."""
    ones = 0
    for b in bits:
        if int(b) == 1:
            ones += 1
    return [1] * ones + [0] * (len(bits) - ones)


def kth_one(bits: "list[int] | str", k: int) -> "int | None":
    """1-based position of the k-th 1, or None if fewer than k ones."""
    if k < 1:
        raise KOutOfRange(f"k={k} must be >= 1")
    seen = 0
    for i, b in enumerate(bits):
        if int(b) == 1:
            seen += 1
            if seen == k:
                return i + 1
    return None


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


def primitive_root(m: int) -> int:
    """Smallest generator of the multiplicative group mod prime m, by trial."""
    if not is_prime(m):
        raise NotPrime(f"{m} is not prime")
    if m == 2:
        return 1
    for g in range(2, m):
        seen = set()
        v = 1
        for _ in range(m - 1):
            v = (v * g) % m
            seen.add(v)
        if len(seen) == m - 1:
            return g
    raise NotPrime(f"no primitive root found for {m}")  # pragma: no cover


def mod_op(op: str, i: int, j: int, m: int) -> int:
    """Reference modular arithmetic: add, sub, mul, div, exp over modulus m.

    div and exp require m prime (inverse / primitive-root identities);
    exponent arithmetic for exp runs mod m-1.
    """
    if op == "add":
        return (i + j) % m
    if op == "sub":
        return (i - j) % m
    if op == "mul":
        return (i * j) % m
    if op == "div":
        if not is_prime(m):
            raise NotPrime(f"{m} is not prime")
        if j % m == 0:
            raise DivisionByZero("division by zero")
        inv = 1
        for _ in range(m - 2):  # j^(m-2) by repeated multiplication
            inv = (inv * j) % m
        return (i * inv) % m
    if op == "exp":
        if not is_prime(m):
            raise NotPrime(f"{m} is not prime")
        result = 1
        for _ in range(j):
            result = (result * i) % m
        return result
    raise ValueError(f"unknown op {op!r}")


def euclid_gcd(x: int, y: int) -> int:
    """Classical Euclid."""
    if x < 1 or y < 1:
        raise ValueError("operands must be >= 1")
    while y:
        x, y = y, x % y
    return x


def is_well_formed(x: int, y: int, n: int) -> bool:
    return 1 <= y < n and 0 <= x <= y


def is_bivalent(x: int, y: int, n: int, k: int) -> bool:
    return 0 <= x < k and (k - x) <= (n - y)


def enumerate_valid_pairs(n: int, k: int) -> set[tuple[int, int]]:
    """All (x, y) value pairs that are both well-formed and bivalent."""
    if n <= 1:
        raise ValueError("n must be > 1")
    if not 1 <= k <= n:
        raise KOutOfRange(f"k={k} outside 1..{n}")
    pairs = set()
    for y in range(1, n):
        for x in range(0, y + 1):
            if is_bivalent(x, y, n, k):
                pairs.add((x, y))
    return pairs
