"""The two-variable Alexander invariant of virtual knot closures.

Crossings act linearly on strand labels over the Laurent ring Z[s^±1, t^±1];
the determinant of the resulting relation matrix, normalized up to units, is
an invariant of the braid closure.
"""

from __future__ import annotations

from .braids import BraidWord
from .errors import DomainError
from .laurent import (
    ONE,
    S,
    T,
    LaurentMatrix,
    LaurentPoly,
    determinant,
    format_poly,
)
from .terms import BQPresentation, BQTerm

_S_INV = LaurentPoly.monomial(1, -1, 0)
_T_INV = LaurentPoly.monomial(1, 0, -1)
_ST_INV = LaurentPoly.monomial(1, -1, -1)


def _m2(a, b, c, d) -> LaurentMatrix:
    return LaurentMatrix([[a, b], [c, d]])


_CROSSING_MATRICES = {
    # Positive upward crossing and its hat (strand-swapped) partner.
    "A": _m2(ONE - S * T, T, S, LaurentPoly()),
    "Ahat": _m2(LaurentPoly(), S, T, ONE - S * T),
    # Inverse crossing pair.
    "B": _m2(LaurentPoly(), _S_INV, _T_INV, ONE - _ST_INV),
    "Bhat": _m2(ONE - _ST_INV, _T_INV, _S_INV, LaurentPoly()),
    # Mixed-variable pair used by the horizontal-mirror symmetry.
    "C": _m2(LaurentPoly(), _S_INV, T, _S_INV - T),
    "Chat": _m2(_S_INV - T, T, _S_INV, LaurentPoly()),
    "D": _m2(LaurentPoly(), S, _T_INV, S - _T_INV),
    "Dhat": _m2(S - _T_INV, _T_INV, S, LaurentPoly()),
    # Virtual crossing: plain swap.
    "V": _m2(LaurentPoly(), ONE, ONE, LaurentPoly()),
}


def crossing_matrix(name: str) -> LaurentMatrix:
    """The 2x2 label action of a single crossing, by conventional name."""
    try:
        m = _CROSSING_MATRICES[name]
    except KeyError:
        raise ValueError(f"unknown crossing matrix {name!r}") from None
    return LaurentMatrix([row[:] for row in m.entries])


def block_at(m2: LaurentMatrix, n: int, start: int) -> LaurentMatrix:
    """Embed a 2x2 matrix into the n x n identity at rows/cols start, start+1."""
    if not 0 <= start <= n - 2:
        raise ValueError(f"block start {start} out of range for size {n}")
    out = LaurentMatrix.identity(n)
    for di in range(2):
        for dj in range(2):
            out.entries[start + di][start + dj] = m2.entries[di][dj]
    return out


def braid_matrix_up(w: BraidWord) -> LaurentMatrix:
    """Linearized upward action of the whole word on strand labels.

    The action is an anti-homomorphism, so each successive letter's block
    multiplies on the left.
    """
    n = w.strands
    out = LaurentMatrix.identity(n)
    for letter in w.letters:
        if letter.virtual:
            name = "V"
        else:
            name = "A" if letter.exponent > 0 else "B"
        out = block_at(crossing_matrix(name), n, letter.index - 1) @ out
    return out


def braid_matrix_down(w: BraidWord) -> LaurentMatrix:
    """Linearized downward action of the whole word on strand labels.

    The downward action is a homomorphism, so blocks multiply on the right;
    positions count from the top strand.
    """
    n = w.strands
    out = LaurentMatrix.identity(n)
    for letter in w.letters:
        if letter.virtual:
            name = "V"
        else:
            name = "Bhat" if letter.exponent > 0 else "Ahat"
        out = out @ block_at(crossing_matrix(name), n, n - 1 - letter.index)
    return out


def relation_matrix_from_braid(w: BraidWord) -> LaurentMatrix:
    """Closure relations in matrix form: the upward word action minus identity."""
    return braid_matrix_up(w) - LaurentMatrix.identity(w.strands)


_LINEAR_RULES = {
    # op name -> (left multiplier, right multiplier or None when absent)
    "ur": (T, ONE - S * T),
    "lr": (S, None),
    "ul": (_T_INV, ONE - _ST_INV),
    "ll": (_S_INV, None),
}


def _linearize(term: BQTerm, mult: LaurentPoly, acc: dict[str, LaurentPoly]) -> None:
    if term.is_gen:
        acc[term.name] = acc.get(term.name, LaurentPoly()) + mult
        return
    left_mult, right_mult = _LINEAR_RULES[term.op]
    _linearize(term.left, mult * left_mult, acc)
    if right_mult is not None:
        _linearize(term.right, mult * right_mult, acc)


def relation_matrix_from_presentation(p: BQPresentation) -> LaurentMatrix:
    """Linearize each relation over Z[s^±1, t^±1]; one row per relation."""
    index = {name: k for k, name in enumerate(p.generators)}
    rows = []
    for rel in p.relations:
        acc: dict[str, LaurentPoly] = {}
        _linearize(rel.lhs, ONE, acc)
        neg: dict[str, LaurentPoly] = {}
        _linearize(rel.rhs, ONE, neg)
        row = [LaurentPoly() for _ in p.generators]
        for name, coeff in acc.items():
            row[index[name]] = row[index[name]] + coeff
        for name, coeff in neg.items():
            row[index[name]] = row[index[name]] - coeff
        rows.append(row)
    return LaurentMatrix(rows)


def normalize_gap(p: LaurentPoly) -> LaurentPoly:
    """Canonical representative modulo multiplication by units ±s^i t^j.

    Shift so both minimal degrees are zero, then fix the overall sign by
    making the coefficient of the lexicographically smallest monomial
    positive. The zero polynomial maps to itself.
    """
    if not p.terms:
        return LaurentPoly()
    mi, mj = p.min_degrees()
    shifted = p.scale_by_monomial(-mi, -mj)
    if shifted.terms[min(shifted.terms)] < 0:
        shifted = -shifted
    return shifted


def gap(x) -> LaurentPoly:
    """Normalized generalized Alexander polynomial of a closed braid.

    Accepts a braid word or an already-built presentation. Presentations must
    be square (as many relations as generators).
    """
    if isinstance(x, BraidWord):
        matrix = relation_matrix_from_braid(x)
    elif isinstance(x, BQPresentation):
        matrix = relation_matrix_from_presentation(x)
        if matrix.rows != matrix.cols:
            raise DomainError(
                f"need a square system, got {matrix.rows} relations for {matrix.cols} generators"
            )
    else:
        raise TypeError(f"gap expects a braid word or presentation, got {type(x).__name__}")
    return normalize_gap(determinant(matrix))


def gap_text(x) -> str:
    """Canonical text of the normalized polynomial, for printing and goldens."""
    return format_poly(gap(x))
