"""Noncommutative Laurent polynomials in generators ``U1 ... Un``.

A word is a tuple of letters ``(index, exponent)`` with exponent ``+1`` or
``-1``; words are kept verbatim, no reordering and no free cancellation. The
text form is ``U1 + U1' + U2 + U2'`` with ``'`` marking an inverse, an
optional ``coefficient*`` prefix and words written as concatenated letters
(``U2U1'``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from numbers import Number
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, ShapeError, UnsupportedError

__all__ = ["NcPolynomial", "gen", "harper", "substitute"]

Letter = tuple[int, int]
Word = tuple[Letter, ...]


def _normalize(terms: Iterable[tuple[complex, Word]]) -> tuple[tuple[complex, Word], ...]:
    acc: dict[Word, complex] = {}
    for c, w in terms:
        w = tuple((int(i), int(e)) for i, e in w)
        for i, e in w:
            if i < 1 or e not in (1, -1):
                raise DomainError(f"bad letter ({i}, {e})")
        acc[w] = acc.get(w, 0j) + complex(c)
    return tuple((c, w) for w, c in acc.items() if c != 0)


@dataclass(frozen=True)
class NcPolynomial:
    """Formal sum of words with complex coefficients.

    Like words are merged and zero coefficients dropped on construction; term
    order follows first appearance.
    """

    terms: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", _normalize(self.terms))

    @classmethod
    def constant(cls, c: complex) -> "NcPolynomial":
        return cls(((c, ()),))

    @classmethod
    def word(cls, *letters: Letter, coeff: complex = 1) -> "NcPolynomial":
        return cls(((coeff, tuple(letters)),))

    @property
    def n_gens(self) -> int:
        """Largest generator index used (0 for a constant)."""
        return max((i for _, w in self.terms for i, _ in w), default=0)

    @property
    def degree(self) -> int:
        return max((len(w) for _, w in self.terms), default=0)

    def has_inverse(self) -> bool:
        return any(e < 0 for _, w in self.terms for _, e in w)

    def adjoint(self) -> "NcPolynomial":
        """``(c * l1...lm)* = conj(c) * lm^-1 ... l1^-1``."""
        return NcPolynomial(
            (c.conjugate(), tuple((i, -e) for i, e in reversed(w))) for c, w in self.terms
        )

    @property
    def H(self) -> "NcPolynomial":
        return self.adjoint()

    def is_self_adjoint(self) -> bool:
        return _as_dict(self) == _as_dict(self.adjoint())

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return NcPolynomial(self.terms + other.terms)

    def __radd__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + self

    def __neg__(self):
        return NcPolynomial((-c, w) for c, w in self.terms)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, Number):
            return NcPolynomial((c * other, w) for c, w in self.terms)
        if not isinstance(other, NcPolynomial):
            return NotImplemented
        return NcPolynomial(
            (c1 * c2, w1 + w2) for c1, w1 in self.terms for c2, w2 in other.terms
        )

    def __rmul__(self, other):
        if isinstance(other, Number):
            return NcPolynomial((other * c, w) for c, w in self.terms)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative powers of polynomials are not defined")
        out = NcPolynomial.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.terms)

    def to_string(self, symbol: str = "U") -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, (c, w) in enumerate(self.terms):
            sign, body = _format_term(c, w, symbol)
            if k == 0:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.to_string()

    @classmethod
    def parse(cls, text: str, symbol: str = "U") -> "NcPolynomial":
        return parse(text, symbol)


def _as_dict(x: NcPolynomial) -> dict:
    return dict((w, c) for c, w in x.terms)


def _coerce(other):
    if isinstance(other, NcPolynomial):
        return other
    if isinstance(other, Number):
        return NcPolynomial.constant(other)
    return NotImplemented


def gen(i: int, exp: int = 1) -> NcPolynomial:
    """The generator ``Ui`` (``exp=-1`` for its inverse)."""
    return NcPolynomial.word((i, exp))


def harper() -> NcPolynomial:
    """``U1 + U1^-1 + U2 + U2^-1``."""
    return gen(1) + gen(1, -1) + gen(2) + gen(2, -1)


# -- text format --------------------------------------------------------------

def _fmt_float(x: float) -> str:
    if x.is_integer() and abs(x) < 1e15:
        return str(int(x))
    return repr(x)


def _format_word(w: Word, symbol: str) -> str:
    return "".join(f"{symbol}{i}" + ("'" if e < 0 else "") for i, e in w)


def _format_term(c: complex, w: Word, symbol: str) -> tuple[str, str]:
    word = _format_word(w, symbol)
    if c.imag == 0:
        sign = "-" if c.real < 0 else "+"
        mag = abs(c.real)
        if mag == 1 and word:
            return sign, word
        coef = _fmt_float(mag)
    else:
        sign = "+"
        im_sign = "-" if c.imag < 0 else "+"
        coef = f"({repr(c.real)}{im_sign}{repr(abs(c.imag))}j)"
    return sign, f"{coef}*{word}" if word else coef


_NUMBER = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?|inf|nan"


def _split_terms(text: str) -> list[tuple[str, str]]:
    """Split at top-level ``+``/``-`` signs, skipping exponent signs and parentheses."""
    out, depth, start, sign = [], 0, 0, "+"
    s = text.strip()
    if s[:1] in "+-":
        sign, s = s[0], s[1:]
    i = 0
    while i < len(s):
        ch = s[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0:
            prev = s[:i].rstrip()
            if not (prev[-1:] in "eE" and len(prev) >= 2 and prev[-2].isdigit()):
                out.append((sign, s[start:i]))
                sign, start = ch, i + 1
        i += 1
    out.append((sign, s[start:]))
    return out


def parse(text: str, symbol: str = "U") -> NcPolynomial:
    """Inverse of :meth:`NcPolynomial.to_string`."""
    if not text.strip():
        raise DomainError("empty polynomial text")
    if text.strip() == "0":
        return NcPolynomial()
    sym = re.escape(symbol)
    word_re = re.compile(rf"(?:{sym}(\d+)('?))")
    term_re = re.compile(
        rf"^\s*(?P<coef>\([^()]*\)|(?:{_NUMBER})j?)?\s*(?P<star>\*)?\s*(?P<word>(?:{sym}\d+'?\s*\*?\s*)*)$"
    )
    terms = []
    for sign, body in _split_terms(text):
        m = term_re.match(body)
        if not m or (not m.group("coef") and not m.group("word").strip()):
            raise DomainError(f"cannot parse term {body.strip()!r} in {text!r}")
        coef_s = m.group("coef")
        try:
            c = complex(coef_s) if coef_s else 1 + 0j
        except ValueError as exc:
            raise DomainError(f"bad coefficient {coef_s!r}") from exc
        if sign == "-":
            c = -c
        letters = tuple(
            (int(i), -1 if prime else 1) for i, prime in word_re.findall(m.group("word"))
        )
        terms.append((c, letters))
    return NcPolynomial(tuple(terms))


# -- substitution ---------------------------------------------------------------

def substitute(x: NcPolynomial, mats: Sequence[np.ndarray], *, allow_inverse: bool = True) -> np.ndarray:
    """Evaluate ``x`` with ``mats[i-1]`` in place of ``Ui``.

    Inverse letters map to the conjugate transpose, which is the inverse only
    for unitary inputs. ``allow_inverse=False`` rejects them instead.
    """
    mats = [np.asarray(m, dtype=complex) for m in mats]
    if not mats:
        raise ShapeError("need at least one matrix")
    d = mats[0].shape[0]
    for m in mats:
        if m.ndim != 2 or m.shape != (d, d):
            raise ShapeError(f"matrices must all be {d}x{d}, got {m.shape}")
    if x.n_gens > len(mats):
        raise UnsupportedError(f"polynomial uses U{x.n_gens} but only {len(mats)} matrices given")
    if not allow_inverse and x.has_inverse():
        raise UnsupportedError("inverse letters are not allowed here")
    adj = [m.conj().T for m in mats]
    out = np.zeros((d, d), dtype=complex)
    eye = np.eye(d, dtype=complex)
    for c, w in x.terms:
        prod = eye
        for i, e in w:
            prod = prod @ (mats[i - 1] if e > 0 else adj[i - 1])
        out += c * prod
    return out
