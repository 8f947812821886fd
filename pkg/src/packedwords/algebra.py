"""The graded algebra of packed words under shifted concatenation.

``shifted_concat`` appends the right factor after lifting its nonzero
letters above the left factor's supremum; packed words are closed under it
and form a free monoid, so every nonempty packed word factors uniquely into
irreducible ones.  ``LinComb`` carries formal sums with exact rational
coefficients and extends the product bilinearly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Tuple, Union

from .words import Word, require_packed

__all__ = [
    "Scalar",
    "LinComb",
    "shifted_concat",
    "product",
    "admissible_cuts",
    "is_irreducible",
    "factor_irreducible",
]

# Exact rational scalars; arbitrary precision, always in lowest terms.
Scalar = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def shifted_concat(u: Word, v: Word) -> Word:
    """u followed by v with v's nonzero letters raised by sup(u).

    Defined for arbitrary words; packed inputs give a packed result, with
    length and supremum both adding up.
    """
    t = u.sup
    return Word._raw(u.letters + tuple(i + t if i else 0 for i in v.letters))


class LinComb:
    """Finite formal sum of packed words with rational coefficients.

    The empty sum is zero; the empty word with coefficient 1 is the unit of
    the algebra.  Instances are treated as immutable: every operation
    returns a fresh value and no stored coefficient is ever zero.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Union[Mapping[Word, object], Iterable[Tuple[Word, object]]] = ()) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, Fraction] = {}
        for w, c in items:
            require_packed(w)
            c = Fraction(c)
            c += acc.get(w, _ZERO)
            if c:
                acc[w] = c
            else:
                acc.pop(w, None)
        self.terms = acc

    @classmethod
    def _raw(cls, terms: dict[Word, Fraction]) -> "LinComb":
        # internal: terms already normalized (packed keys, no zeros)
        self = cls.__new__(cls)
        self.terms = terms
        return self

    @classmethod
    def zero(cls) -> "LinComb":
        return cls._raw({})

    @classmethod
    def unit(cls) -> "LinComb":
        return cls._raw({Word(): _ONE})

    @classmethod
    def word(cls, w: Word, coeff: object = 1) -> "LinComb":
        require_packed(w)
        c = Fraction(coeff)
        return cls._raw({w: c} if c else {})

    def coefficient(self, w: Word) -> Fraction:
        return self.terms.get(w, _ZERO)

    def items(self) -> list[Tuple[Word, Fraction]]:
        """Terms in canonical word order."""
        return sorted(self.terms.items())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        acc = dict(self.terms)
        for w, c in other.terms.items():
            s = acc.get(w, _ZERO) + c
            if s:
                acc[w] = s
            else:
                acc.pop(w, None)
        return LinComb._raw(acc)

    def __sub__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "LinComb":
        return LinComb._raw({w: -c for w, c in self.terms.items()})

    def __rmul__(self, scalar: object) -> "LinComb":
        c = Fraction(scalar)
        if not c:
            return LinComb.zero()
        return LinComb._raw({w: c * v for w, v in self.terms.items()})

    def __mul__(self, other: object) -> "LinComb":
        if isinstance(other, (LinComb, Word)):
            return product(self, other)
        return self.__rmul__(other)

    def text(self) -> str:
        """Canonically ordered rendering, e.g. "2*1,0 + -1*1,1"."""
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{w.text()}" for w, c in self.items())

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"LinComb({self.text()!r})"


def _as_lincomb(x: Union[LinComb, Word]) -> LinComb:
    if isinstance(x, LinComb):
        return x
    if isinstance(x, Word):
        return LinComb.word(x)
    raise TypeError(f"expected Word or LinComb, got {type(x).__name__}")


def product(a: Union[LinComb, Word], b: Union[LinComb, Word]) -> LinComb:
    """Bilinear extension of shifted concatenation."""
    a = _as_lincomb(a)
    b = _as_lincomb(b)
    acc: dict[Word, Fraction] = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            w = shifted_concat(u, v)
            s = acc.get(w, _ZERO) + cu * cv
            if s:
                acc[w] = s
            else:
                acc.pop(w, None)
    return LinComb._raw(acc)


def _suffix_min_nonzero(letters: Tuple[int, ...]) -> list:
    # entry i: least nonzero index in letters[i:], or None if there is none
    n = len(letters)
    mins = [None] * (n + 1)
    running = None
    for i in range(n - 1, -1, -1):
        li = letters[i]
        if li and (running is None or li < running):
            running = li
        mins[i] = running
    return mins


def _cut_positions(w: Word) -> Iterable[int]:
    # yields cut positions in increasing order; caller guarantees w packed, nonempty
    letters = w.letters
    n = len(letters)
    mins = _suffix_min_nonzero(letters)
    prefix_sup = 0
    for i in range(1, n):
        prefix_sup = max(prefix_sup, letters[i - 1])
        m = mins[i]
        if m is None or prefix_sup == m - 1:
            yield i


def admissible_cuts(w: Word) -> frozenset[int]:
    """Positions i in 1..|w|-1 where w splits as (first i letters) * rest.

    A cut is admissible when the suffix has no nonzero letters, or the
    suffix's least nonzero index exceeds the prefix supremum by exactly one.
    """
    require_packed(w)
    if not len(w):
        raise ValueError("the empty word has no cut positions")
    return frozenset(_cut_positions(w))


def is_irreducible(w: Word) -> bool:
    """True iff the nonempty packed word admits no split into two factors."""
    require_packed(w)
    if not len(w):
        raise ValueError("the empty word is neither irreducible nor reducible")
    return next(iter(_cut_positions(w)), None) is None


def _split_at(w: Word, i: int) -> Tuple[Word, Word]:
    # split a packed word at an admissible cut; the suffix is shifted back down
    head = Word._raw(w.letters[:i])
    s = head.sup
    tail = Word._raw(tuple(j - s if j else 0 for j in w.letters[i:]))
    return head, tail


def factor_irreducible(w: Word) -> list[Word]:
    """Unique factorization of a nonempty packed word into irreducibles.

    Splits greedily at the leftmost admissible cut; by uniqueness of the
    factorization any cut order gives the same result.
    """
    require_packed(w)
    if not len(w):
        raise ValueError("the empty word has no irreducible factorization")
    factors = []
    cur = w
    while True:
        i = next(iter(_cut_positions(cur)), None)
        if i is None:
            factors.append(cur)
            return factors
        head, cur = _split_at(cur, i)
        factors.append(head)


def _factor_rightmost(w: Word) -> list[Word]:
    # same factorization computed by peeling irreducible factors off the right;
    # used as an internal cross-check of uniqueness
    require_packed(w)
    if not len(w):
        raise ValueError("the empty word has no irreducible factorization")
    factors = []
    cur = w
    while True:
        i = None
        for j in _cut_positions(cur):
            i = j
        if i is None:
            factors.append(cur)
            factors.reverse()
            return factors
        head, tail = _split_at(cur, i)
        factors.append(tail)
        cur = head
