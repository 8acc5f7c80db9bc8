"""Matrices over the small finite fields, as arrays of element codes.

An FfMatrix wraps a read-only numpy int16 array of codes together with
its FieldCtx; all arithmetic is table lookup, so a matrix product or a
Gaussian elimination step never leaves exact field arithmetic.

The three symmetry classes used downstream are plain symmetric
(M^t = M), skew-symmetric (M^t = -M, zero diagonal since the
characteristic is odd), and skew-Hermitian over a quadratic extension
(conj(M)^t = -M, diagonal on the trace-zero line).  Each class can be
enumerated exhaustively in a deterministic order: free positions are
visited row by row and the candidate codes ascend, so the first free
entry is the most significant digit.
"""

from __future__ import annotations

import enum
from itertools import product

import numpy as np

from .gf import FieldCtx, FieldElement, frobenius, norm, relative_trace

__all__ = [
    "FfMatrix",
    "SymmetryClass",
    "rank",
    "conj_transpose",
    "is_in_class",
    "class_size",
    "enumerate_class",
    "trace_pairing",
    "twisted_trace_pairing",
    "skew_hermitian_normal_form",
    "gram_matrix",
    "reversal_matrix",
]

DEFAULT_ENUM_BUDGET = 10 ** 8


class SymmetryClass(enum.Enum):
    SYMMETRIC = "symmetric"
    SKEW_SYMMETRIC = "skew-symmetric"
    SKEW_HERMITIAN = "skew-hermitian"


class FfMatrix:
    """An immutable matrix over a FieldCtx, stored as element codes."""

    __slots__ = ("field", "codes")

    def __init__(self, field: FieldCtx, data):
        codes = _codes_from(field, data)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "codes", codes)

    def __setattr__(self, name, value):
        raise AttributeError("matrices are immutable")

    @classmethod
    def from_codes(cls, field: FieldCtx, array: np.ndarray, copy: bool = True) -> "FfMatrix":
        a = np.array(array, dtype=np.int16, copy=copy)
        if a.ndim != 2:
            raise ValueError("codes array must be two-dimensional")
        if a.size and (a.min() < 0 or a.max() >= field.q):
            raise ValueError("element code out of range")
        a.setflags(write=False)
        return cls.__new__(cls)._init_raw(field, a)

    def _init_raw(self, field, a):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "codes", a)
        return self

    @classmethod
    def zeros(cls, field: FieldCtx, rows: int, cols: int) -> "FfMatrix":
        return cls.from_codes(field, np.zeros((rows, cols), dtype=np.int16), copy=False)

    @classmethod
    def identity(cls, field: FieldCtx, n: int) -> "FfMatrix":
        return cls.from_codes(field, np.eye(n, dtype=np.int16), copy=False)

    @property
    def rows(self) -> int:
        return self.codes.shape[0]

    @property
    def cols(self) -> int:
        return self.codes.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.codes.shape

    def entry(self, i: int, j: int) -> FieldElement:
        return self.field.elem(int(self.codes[i, j]))

    def __getitem__(self, key):
        if isinstance(key, tuple) and len(key) == 2:
            i, j = key
            if isinstance(i, slice) or isinstance(j, slice):
                sub = self.codes[i, j]
                if sub.ndim == 1:
                    sub = sub.reshape(1, -1) if isinstance(i, int) else sub.reshape(-1, 1)
                return FfMatrix.from_codes(self.field, sub)
            return self.entry(i, j)
        raise TypeError("index with a pair (i, j) of ints or slices")

    def __matmul__(self, other: "FfMatrix") -> "FfMatrix":
        self._check_field(other)
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        ADD, MUL = self.field._add, self.field._mul
        out = np.zeros((self.rows, other.cols), dtype=np.int16)
        for t in range(self.cols):
            out = ADD[out, MUL[self.codes[:, t][:, None], other.codes[t, :][None, :]]]
        return FfMatrix.from_codes(self.field, out, copy=False)

    def __add__(self, other: "FfMatrix") -> "FfMatrix":
        self._check_field(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch in matrix sum")
        return FfMatrix.from_codes(self.field, self.field._add[self.codes, other.codes], copy=False)

    def __sub__(self, other: "FfMatrix") -> "FfMatrix":
        self._check_field(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch in matrix sum")
        return FfMatrix.from_codes(self.field, self.field._sub[self.codes, other.codes], copy=False)

    def __neg__(self) -> "FfMatrix":
        return FfMatrix.from_codes(self.field, self.field._neg[self.codes], copy=False)

    def __rmul__(self, scalar) -> "FfMatrix":
        if isinstance(scalar, int):
            scalar = self.field.elem(scalar % self.field.p)
        if not isinstance(scalar, FieldElement) or scalar.field != self.field:
            return NotImplemented
        return FfMatrix.from_codes(self.field, self.field._mul[scalar.code, self.codes], copy=False)

    __mul__ = __rmul__

    def transpose(self) -> "FfMatrix":
        return FfMatrix.from_codes(self.field, self.codes.T)

    @property
    def T(self) -> "FfMatrix":
        return self.transpose()

    def _check_field(self, other):
        if not isinstance(other, FfMatrix) or other.field != self.field:
            raise ValueError("matrices over different fields")

    def __eq__(self, other) -> bool:
        if not isinstance(other, FfMatrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and np.array_equal(self.codes, other.codes)
        )

    def __hash__(self) -> int:
        return hash((self.field._key, self.shape, self.codes.tobytes()))

    def is_zero(self) -> bool:
        return not self.codes.any()

    def __repr__(self) -> str:
        return f"FfMatrix(GF({self.field.q}), {self.codes.tolist()!r})"


def _codes_from(field: FieldCtx, data) -> np.ndarray:
    rows = []
    for row in data:
        r = []
        for x in row:
            if isinstance(x, FieldElement):
                if x.field != field:
                    raise ValueError("entry from a different field")
                r.append(x.code)
            else:
                c = int(x)
                if not 0 <= c < field.q:
                    raise ValueError("element code out of range")
                r.append(c)
        rows.append(r)
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged rows")
    a = np.array(rows, dtype=np.int16) if rows else np.zeros((0, 0), dtype=np.int16)
    if a.ndim == 1:
        a = a.reshape(len(rows), 0)
    a.setflags(write=False)
    return a


def rank(M: FfMatrix) -> int:
    """Rank by Gaussian elimination; a 0-by-k matrix has rank 0."""
    A = np.array(M.codes, dtype=np.int16, copy=True)
    nrows, ncols = A.shape
    if nrows == 0 or ncols == 0:
        return 0
    f = M.field
    MUL, SUB, INV = f._mul, f._sub, f._inv
    r = 0
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if A[i, c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r, c:] = MUL[int(INV[A[r, c]]), A[r, c:]]
        below = A[r + 1 :, c]
        if below.size:
            A[r + 1 :, c:] = SUB[A[r + 1 :, c:], MUL[below[:, None], A[r, c:][None, :]]]
        r += 1
        if r == nrows:
            break
    return r


def conj_transpose(M: FfMatrix) -> "FfMatrix":
    """Entrywise conjugate of the transpose; needs a quadratic extension."""
    if M.field.base is None:
        raise ValueError("no conjugation defined")
    return FfMatrix.from_codes(M.field, M.field._frob[M.codes.T])


def is_in_class(M: FfMatrix, cls: SymmetryClass) -> bool:
    if M.rows != M.cols:
        raise ValueError("matrix must be square")
    c = M.codes
    f = M.field
    if cls is SymmetryClass.SYMMETRIC:
        return np.array_equal(c, c.T)
    if cls is SymmetryClass.SKEW_SYMMETRIC:
        return np.array_equal(c, f._neg[c.T])
    if cls is SymmetryClass.SKEW_HERMITIAN:
        if f.base is None:
            raise ValueError("no conjugation defined")
        return np.array_equal(c, f._neg[f._frob[c.T]])
    raise ValueError("unknown symmetry class")


def class_size(n: int, cls: SymmetryClass, field: FieldCtx) -> int:
    q = field.q
    if cls is SymmetryClass.SYMMETRIC:
        return q ** (n * (n + 1) // 2)
    if cls is SymmetryClass.SKEW_SYMMETRIC:
        return q ** (n * (n - 1) // 2)
    if cls is SymmetryClass.SKEW_HERMITIAN:
        if field.base is None:
            raise ValueError("no conjugation defined")
        return field.base.q ** (n * n)
    raise ValueError("unknown symmetry class")


def enumerate_class(n: int, cls: SymmetryClass, field: FieldCtx, budget: int = DEFAULT_ENUM_BUDGET):
    """All n-by-n matrices of a symmetry class, in a fixed canonical order.

    Refuses up front if the class has more than `budget` members.
    """
    total = class_size(n, cls, field)
    if total > budget:
        raise ValueError(f"enumeration too large: {total} matrices exceeds budget {budget}")
    all_codes = list(range(field.q))
    if cls is SymmetryClass.SKEW_HERMITIAN:
        diag_codes = field.trace_zero_codes()
    positions = []
    choices = []
    for i in range(n):
        start = i if cls is not SymmetryClass.SKEW_SYMMETRIC else i + 1
        for j in range(start, n):
            positions.append((i, j))
            if i == j and cls is SymmetryClass.SKEW_HERMITIAN:
                choices.append(diag_codes)
            else:
                choices.append(all_codes)
    neg = field._neg
    frob = field._frob

    def generate():
        for combo in product(*choices):
            M = np.zeros((n, n), dtype=np.int16)
            for (i, j), c in zip(positions, combo):
                M[i, j] = c
                if i != j:
                    if cls is SymmetryClass.SYMMETRIC:
                        M[j, i] = c
                    elif cls is SymmetryClass.SKEW_SYMMETRIC:
                        M[j, i] = neg[c]
                    else:
                        M[j, i] = neg[frob[c]]
            yield FfMatrix.from_codes(field, M, copy=False)

    return generate()


def trace_pairing(X: FfMatrix, Y: FfMatrix) -> FieldElement:
    """tr(X Y) for matrices whose product is square."""
    if X.field != Y.field:
        raise ValueError("matrices over different fields")
    if X.cols != Y.rows or X.rows != Y.cols:
        raise ValueError("shapes do not compose to a square product")
    f = X.field
    ADD, MUL = f._add, f._mul
    prods = MUL[X.codes, Y.codes.T]
    acc = 0
    for v in prods.flat:
        acc = int(ADD[acc, v])
    return f.elem(acc)


def twisted_trace_pairing(X: FfMatrix, Y: FfMatrix) -> FieldElement:
    """tr(X Y) + tr(X Y)^Q, an element of the base field."""
    return relative_trace(trace_pairing(X, Y))


def _norm_preimage(field: FieldCtx, target: FieldElement) -> FieldElement:
    # smallest-code c with c * c^Q = target; exists since the norm is onto
    for c in field.elements():
        if c.code and norm(c) == target:
            return c
    raise ValueError("norm equation has no solution")


def skew_hermitian_normal_form(C: FfMatrix):
    """Congruence transform of a skew-Hermitian matrix to alpha * diag(I_r, 0).

    Returns (A, r, alpha) with A invertible, r = rank(C), alpha the
    adjoined generator t, and A C conj(A)^t = alpha * diag(I_r, 0).
    """
    field = C.field
    if field.base is None:
        raise ValueError("no conjugation defined")
    if not is_in_class(C, SymmetryClass.SKEW_HERMITIAN):
        raise ValueError("matrix is not skew-hermitian")
    n = C.rows
    alpha = field.gen()
    one = field.one()

    def form(x: FfMatrix, y: FfMatrix) -> FieldElement:
        return (x @ C @ conj_transpose(y)).entry(0, 0)

    rows = [FfMatrix.identity(field, n)[i : i + 1, :] for i in range(n)]
    pivots: list[FfMatrix] = []
    while rows:
        pick = None
        drop = -1
        for idx, v in enumerate(rows):
            if form(v, v):
                pick, drop = v, idx
                break
        if pick is None:
            # the form vanishes on every basis vector; look for an
            # off-diagonal value m and fix it up with v_i + c v_j
            for i in range(len(rows)):
                for j in range(i + 1, len(rows)):
                    m = form(rows[i], rows[j])
                    if not m:
                        continue
                    for c in (one, alpha):
                        cand = rows[i] + c * rows[j]
                        if form(cand, cand):
                            pick, drop = cand, i
                            break
                    if pick is not None:
                        break
                if pick is not None:
                    break
        if pick is None:
            break
        beta = form(pick, pick)
        target = alpha / beta
        assert target.code < field.base.q, "diagonal ratio must lie in the base field"
        c = _norm_preimage(field, field.base.elem(target.code))
        x = c * pick
        assert form(x, x) == alpha
        pivots.append(x)
        rest = []
        for idx, y in enumerate(rows):
            if idx == drop:
                continue
            gamma = form(y, x) / alpha
            rest.append(y - gamma * x)
        rows = rest
    r = len(pivots)
    stacked = np.vstack([v.codes for v in pivots + rows]) if pivots + rows else np.zeros((0, 0), dtype=np.int16)
    A = FfMatrix.from_codes(field, stacked)
    assert rank(A) == n, "transform must be invertible"
    target = np.zeros((n, n), dtype=np.int16)
    for i in range(r):
        target[i, i] = alpha.code
    assert A @ C @ conj_transpose(A) == FfMatrix.from_codes(field, target), "normal form identity failed"
    assert r == rank(C), "pivot count must equal the rank"
    return A, r, alpha


def gram_matrix(xs, ys, pairing) -> FfMatrix:
    """Matrix of pairing values between two bases, over the value field."""
    values = [[pairing(x, y) for y in ys] for x in xs]
    if not values or not values[0]:
        raise ValueError("empty basis")
    field = values[0][0].field
    return FfMatrix(field, values)


def reversal_matrix(field: FieldCtx, n: int) -> FfMatrix:
    """The antidiagonal permutation matrix (ones from corner to corner)."""
    M = np.zeros((n, n), dtype=np.int16)
    for i in range(n):
        M[i, n - 1 - i] = 1
    return FfMatrix.from_codes(field, M, copy=False)
