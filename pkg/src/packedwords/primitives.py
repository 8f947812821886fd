"""Primitive spaces as exact kernels of the reduced coproduct.

For each grade n the reduced coproduct is a linear map from the span of
the length-n packed words into the span of nonempty word pairs.  Its
matrix over the rationals is assembled sparsely (only pairs that actually
occur become rows) and its nullspace is computed by exact fraction
elimination, so the reported dimensions carry no numerical tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Tuple

from .algebra import LinComb
from .coalgebra import Tensor2, coproduct, reduced_coproduct
from .enumeration import enumerate_packed
from .words import Word

__all__ = [
    "ResourceLimitError",
    "RationalMatrix",
    "PrimitiveBasis",
    "delta_plus_matrix",
    "primitive_space",
    "DEFAULT_GRADE_CAP",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)

DEFAULT_GRADE_CAP = 6


class ResourceLimitError(RuntimeError):
    """A computation was refused because it exceeds a configured size cap."""


def _rref(rows: list[dict[int, Fraction]], ncols: int) -> Tuple[list[int], list[dict[int, Fraction]]]:
    # in-place reduced row echelon form over sparse rational rows; the pivot
    # for each column is the first row with a nonzero entry there
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(rows)):
            if rows[r].get(col):
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        lead = prow[col]
        if lead != 1:
            prow = {c: v / lead for c, v in prow.items()}
            rows[rank] = prow
        for r in range(len(rows)):
            if r == rank:
                continue
            f = rows[r].get(col)
            if not f:
                continue
            row = rows[r]
            for c, v in prow.items():
                nv = row.get(c, _ZERO) - f * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return pivots, rows[:rank]


@dataclass
class RationalMatrix:
    """Sparse exact-rational matrix of the reduced coproduct on one grade.

    Columns are the packed words of the grade in canonical order; rows are
    the nonempty word pairs that occur in at least one column's reduced
    coproduct, sorted canonically.
    """

    col_labels: list[Word]
    row_labels: list[Tuple[Word, Word]]
    rows: list[dict[int, Fraction]]

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.col_labels)

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows[i].get(j, _ZERO)

    def rank(self) -> int:
        pivots, _ = _rref([dict(r) for r in self.rows], self.n_cols)
        return len(pivots)

    def nullspace(self) -> list[list[Fraction]]:
        """Canonical kernel basis: reduced echelon vectors, leading entry 1."""
        pivots, reduced = _rref([dict(r) for r in self.rows], self.n_cols)
        pivot_row = {c: i for i, c in enumerate(pivots)}
        free = [c for c in range(self.n_cols) if c not in pivot_row]
        basis = []
        for f in free:
            vec = [_ZERO] * self.n_cols
            vec[f] = _ONE
            for p, i in pivot_row.items():
                coef = reduced[i].get(f)
                if coef:
                    vec[p] = -coef
            basis.append(vec)
        # normalize the kernel itself to reduced echelon form so the output
        # is canonical regardless of how the free columns were ordered
        sparse = [{c: v for c, v in enumerate(vec) if v} for vec in basis]
        _, reduced_basis = _rref(sparse, self.n_cols)
        out = []
        for row in reduced_basis:
            vec = [_ZERO] * self.n_cols
            for c, v in row.items():
                vec[c] = v
            out.append(vec)
        return out


@dataclass
class PrimitiveBasis:
    """Basis of the primitive space of one grade."""

    grade: int
    dimension: int
    vectors: list[LinComb] = field(default_factory=list)

    def text(self) -> str:
        lines = [f"grade={self.grade} dim={self.dimension}"]
        lines.extend(v.text() for v in self.vectors)
        return "\n".join(lines)


def delta_plus_matrix(n: int) -> RationalMatrix:
    """Matrix of the reduced coproduct on the grade-n word basis.

    Rows are indexed only by pairs that occur in some column; all-zero rows
    are therefore never materialized.  Column count equals the number of
    packed words of length n.
    """
    if n < 1:
        raise ValueError(f"need a grade n >= 1, got {n}")
    cols = enumerate_packed(n)
    by_pair: dict[Tuple[Word, Word], dict[int, Fraction]] = {}
    for j, w in enumerate(cols):
        for pair, c in reduced_coproduct(w).terms.items():
            by_pair.setdefault(pair, {})[j] = c
    labels = sorted(by_pair)
    return RationalMatrix(col_labels=cols, row_labels=labels, rows=[by_pair[p] for p in labels])


def _is_primitive(z: LinComb) -> bool:
    # independent of the matrix: evaluate the coproduct directly
    empty = Word()
    expected = Tensor2({(w, empty): c for w, c in z.terms.items()}) + Tensor2(
        {(empty, w): c for w, c in z.terms.items()}
    )
    return coproduct(z) == expected


def primitive_space(n: int, max_grade: int = DEFAULT_GRADE_CAP) -> PrimitiveBasis:
    """Exact basis of the primitive elements of grade n.

    The kernel of the reduced-coproduct matrix is computed by rational
    elimination and normalized to reduced echelon form over the canonical
    word basis, so the output is deterministic.  Every vector is
    re-checked directly against the coproduct before being returned.
    """
    if n < 1:
        raise ValueError(f"need a grade n >= 1, got {n}")
    if n > max_grade:
        raise ResourceLimitError(
            f"grade {n} exceeds the configured cap {max_grade}; pass a larger max_grade"
        )
    matrix = delta_plus_matrix(n)
    kernel = matrix.nullspace()
    vectors = []
    for vec in kernel:
        z = LinComb((w, c) for w, c in zip(matrix.col_labels, vec) if c)
        if not _is_primitive(z):
            raise ArithmeticError(f"kernel vector is not primitive: {z.text()}")
        vectors.append(z)
    return PrimitiveBasis(grade=n, dimension=len(vectors), vectors=vectors)
