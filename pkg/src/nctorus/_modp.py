"""Dense polynomial arithmetic over F_p, coefficient lists low to high."""

from __future__ import annotations


def trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def reduce(a, p: int) -> list[int]:
    return trim([c % p for c in a])


def sub(a, b, p):
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return trim(out)


def mod(a, f, p):
    a = list(a)
    inv = pow(f[-1], -1, p)
    df = len(f) - 1
    while len(a) - 1 >= df and a:
        c = a[-1] * inv % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        trim(a)
    return a


def gcd(a, b, p):
    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, mod(a, b, p)
    return a


def powmod(base, e: int, f, p):
    result, base = [1], mod(base, f, p)
    while e:
        if e & 1:
            result = mod(mul(result, base, p), f, p)
        base = mod(mul(base, base, p), f, p)
        e >>= 1
    return result


def is_irreducible(f, p: int) -> bool:
    """Ben-Or test; ``f`` must have nonzero leading coefficient mod ``p``."""
    f = reduce(f, p)
    n = len(f) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    x = [0, 1]
    h = x
    for _ in range(n // 2):
        h = powmod(h, p, f, p)
        g = gcd(f, sub(h, x, p), p)
        if len(g) > 1:
            return False
    return True
