"""Built-in Gram matrices and the id grammar that names them.

Ids: `Zn:<n>` (or `Z<n>`) for the standard form, `E8` for the even rank-8
form, `D<n>` for the index-4 even sublattice of Z^n in its root basis, and
`D<n>plus` (n divisible by 4) for its glue extension.  Sums join atoms with
`+`, e.g. `E8+Z1`.

The D<n>plus basis is fixed as (1-indexed ambient coordinates):

    (1/2, ..., 1/2),  e2-e3, ..., e_{n-1}-e_n,  e_{n-1}+e_n

which generates the glue extension and has an integral Gram matrix of
determinant 1; parity is even exactly when n is divisible by 8.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .core import GramMatrix, direct_sum
from .errors import InvalidParameterError, UnknownIdError

__all__ = ["CatalogEntry", "catalog_get", "builtin_ids"]


@dataclass(frozen=True)
class CatalogEntry:
    """A named form with its frozen expected invariants.

    `expected` always carries "det" and "parity"; unimodular entries also
    carry the minimal characteristic norm "m" and "k" = (rank - m) / 8.
    """

    id: str
    gram: GramMatrix
    expected: dict


_E8_ROWS = (
    (2, 0, -1, 0, 0, 0, 0, 0),
    (0, 2, 0, -1, 0, 0, 0, 0),
    (-1, 0, 2, -1, 0, 0, 0, 0),
    (0, -1, -1, 2, -1, 0, 0, 0),
    (0, 0, 0, -1, 2, -1, 0, 0),
    (0, 0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, 0, -1, 2, -1),
    (0, 0, 0, 0, 0, 0, -1, 2),
)

_ZN_RE = re.compile(r"^(?:Zn:|Z)(\d+)$")
_DN_PLUS_RE = re.compile(r"^D(\d+)plus$")
_DN_RE = re.compile(r"^D(\d+)$")


def _gram_from_vectors(vectors: list[list[Fraction]]) -> GramMatrix:
    n = len(vectors)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            x = sum(a * b for a, b in zip(vectors[i], vectors[j]))
            if x.denominator != 1:
                raise InvalidParameterError(f"non-integral Gram entry {x} at ({i},{j})")
            row.append(int(x))
        rows.append(tuple(row))
    return GramMatrix(tuple(rows))


def _zn_gram(n: int) -> GramMatrix:
    return GramMatrix(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))


def _dn_gram(n: int) -> GramMatrix:
    vectors = []
    for i in range(n - 1):
        v = [Fraction(0)] * n
        v[i], v[i + 1] = Fraction(1), Fraction(-1)
        vectors.append(v)
    v = [Fraction(0)] * n
    v[n - 2] = v[n - 1] = Fraction(1)
    vectors.append(v)
    return _gram_from_vectors(vectors)


def _dn_plus_gram(n: int) -> GramMatrix:
    vectors = [[Fraction(1, 2)] * n]
    for i in range(1, n - 1):
        v = [Fraction(0)] * n
        v[i], v[i + 1] = Fraction(1), Fraction(-1)
        vectors.append(v)
    v = [Fraction(0)] * n
    v[n - 2] = v[n - 1] = Fraction(1)
    vectors.append(v)
    return _gram_from_vectors(vectors)


def _atom(token: str) -> tuple[GramMatrix, dict]:
    """Parse one id atom; returns (gram, invariants).

    The invariant dict has det, even (bool) and, for unimodular atoms, the
    minimal characteristic norm m.
    """
    if token == "E8":
        return GramMatrix(_E8_ROWS), {"det": 1, "even": True, "m": 0}
    match = _ZN_RE.match(token)
    if match:
        n = int(match.group(1))
        if n < 1:
            raise InvalidParameterError(f"{token!r}: rank must be at least 1")
        return _zn_gram(n), {"det": 1, "even": False, "m": n}
    match = _DN_PLUS_RE.match(token)
    if match:
        n = int(match.group(1))
        if n < 4 or n % 4 != 0:
            raise InvalidParameterError(
                f"{token!r}: the glue vector is integral only when 4 divides n"
            )
        even = n % 8 == 0
        return _dn_plus_gram(n), {"det": 1, "even": even, "m": 0 if even else 4}
    match = _DN_RE.match(token)
    if match:
        n = int(match.group(1))
        if n < 2:
            raise InvalidParameterError(f"{token!r}: rank must be at least 2")
        return _dn_gram(n), {"det": 4, "even": True, "m": None}
    raise UnknownIdError(f"unrecognized catalog id component {token!r}")


def catalog_get(form_id: str) -> CatalogEntry:
    """Resolve an id to its Gram matrix and frozen invariants."""
    tokens = form_id.split("+")
    if not all(tokens):
        raise UnknownIdError(f"malformed catalog id {form_id!r}")
    parts = [_atom(token) for token in tokens]
    gram = parts[0][0]
    for other, _ in parts[1:]:
        gram = direct_sum(gram, other)
    det = 1
    even = True
    m: int | None = 0
    for _, info in parts:
        det *= info["det"]
        even = even and info["even"]
        m = None if (m is None or info["m"] is None) else m + info["m"]
    expected = {"det": det, "parity": "Even" if even else "Odd"}
    if m is not None and det in (1, -1):
        expected["m"] = m
        expected["k"] = (gram.rank - m) // 8
    return CatalogEntry(id=form_id, gram=gram, expected=expected)


def builtin_ids(max_zn: int = 16) -> tuple[str, ...]:
    """The stock catalog: Z^n up to max_zn, E8 and its Z paddings, E8+E8,
    and the two glue extensions used as goldens."""
    ids = [f"Zn:{n}" for n in range(1, max_zn + 1)]
    ids.append("E8")
    ids.extend(f"E8+Z{k}" for k in range(1, 5))
    ids.extend(["E8+E8", "D12plus", "D16plus"])
    return tuple(ids)
