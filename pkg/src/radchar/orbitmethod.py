"""The radical groups as block matrix groups, with coadjoint orbit tools.

Each group R_u lives inside the 2n-by-2n upper block-unitriangular
matrices over an entry field k (k = F_q for types C and D, k = F_{q^2}
for type U) and factors as R_u = A x| H with both factors abelian:

  h(A) places the H-parameter A in the upper-left n-by-n block L and a
  linked copy in the lower-right block N; a(V) places the n-by-n block
  V in the upper-right corner.  Every element is uniquely a(V) h(A).

Block layout of V (rows split (d, n-d); columns split (d, n-d) for
C and D, (n-d, d) for U):

  C, D:  V = [[B1, B2], [B3, 0]]   with V symmetric (C) or skew (D)
  U:     V = [[B1, B2], [0, B3]]   with B2 J_d skew-Hermitian and
                                   B3 = -J_{n-d} conj(B1^t) J_d

Dual elements are lower-left transposed-support matrices, acted on by
H through conjugation followed by projection onto that support.  The
stabilizer of a dual element is cut out by linear equations whose
coefficient matrix is block diagonal (n-d copies of the B1 block for
C and D, of the B2 block for U); its rank e determines the orbit size
|k|^e and the degree |k|^e of the characters the orbit produces.

Everything in this module is exhaustively verifiable: brute-force
orbit enumeration, conjugacy class counting and the pairing checks are
the oracles the symbolic layer is tested against.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .falinalg import (
    FfMatrix,
    SymmetryClass,
    enumerate_class,
    gram_matrix,
    rank,
    trace_pairing,
    twisted_trace_pairing,
)
from .gf import FieldCtx, field_for_order, quadratic_extension
from .qpoly import QPoly

__all__ = [
    "RadicalParams",
    "RadicalContext",
    "RadicalElement",
    "DualElement",
    "OrbitRecord",
    "OrbitCensus",
    "radical_order",
    "group_mul",
    "group_inv",
    "coadjoint_act",
    "coefficient_matrix",
    "orbit_of",
    "orbit_partition",
    "orbit_census",
    "class_count_brute",
    "pairing_nondegeneracy_check",
    "dual_index",
    "coadjoint_permutation",
]

TYPES = ("C", "D", "U")

DEFAULT_ORBIT_BUDGET = 10 ** 6
DEFAULT_CLASS_BUDGET = 10 ** 4


@dataclass(frozen=True)
class RadicalParams:
    """Combinatorial data (type, n, d) of one radical group."""

    x: str
    n: int
    d: int

    def __post_init__(self):
        if self.x not in TYPES:
            raise ValueError("type must be one of C, D, U")
        if self.n < 1:
            raise ValueError("n out of range")
        lo = 0 if self.x == "U" else 1
        hi = self.n - 1 if self.x == "U" else self.n
        if not lo <= self.d <= hi:
            raise ValueError("d out of range")
        if self.x == "C" and self.n < 3:
            warnings.warn("type C with n < 3 is outside the standard Dynkin range; the matrix model is still well defined")
        if self.x == "D" and self.n < 4:
            warnings.warn("type D with n < 4 is outside the standard Dynkin range; the matrix model is still well defined")

    @property
    def k_exponent(self) -> int:
        """|k| = q ** k_exponent for the entry field k."""
        return 2 if self.x == "U" else 1

    @property
    def a_exponent(self) -> int:
        """|A| = q ** a_exponent."""
        n, d = self.n, self.d
        if self.x == "C":
            return d * (d + 1) // 2 + d * (n - d)
        if self.x == "D":
            return d * (d - 1) // 2 + d * (n - d)
        return d * d + 2 * d * (n - d)

    @property
    def h_exponent(self) -> int:
        """|H| = q ** h_exponent."""
        return self.d * (self.n - self.d) * self.k_exponent

    @property
    def order_exponent(self) -> int:
        return self.a_exponent + self.h_exponent


def radical_order(params: RadicalParams) -> QPoly:
    """|R_u| as a power of q."""
    return QPoly.q_power(params.order_exponent)


def _mm(field: FieldCtx, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    ADD, MUL = field._add, field._mul
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int16)
    for t in range(A.shape[1]):
        out = ADD[out, MUL[A[:, t][:, None], B[t, :][None, :]]]
    return out


def _j_conj_t(field: FieldCtx, X: np.ndarray) -> np.ndarray:
    # -J conj(X)^t J, with the reversal sizes read off from the shape
    return field._neg[field._frob[X].T[::-1, ::-1]]


class RadicalContext:
    """A radical group realized over a concrete field F_q."""

    def __init__(self, params: RadicalParams, q):
        self.params = params
        self.base_field = q if isinstance(q, FieldCtx) else field_for_order(q)
        self.q = self.base_field.q
        if params.x == "U":
            self.field = quadratic_extension(self.base_field)
        else:
            self.field = self.base_field
        self.k_order = self.base_field.q ** params.k_exponent
        assert self.k_order == (self.field.q if params.x == "U" else self.base_field.q)
        n, d = params.n, params.d
        self.n, self.d = n, d
        self._mask = self._build_mask()

    def _build_mask(self) -> np.ndarray:
        n, d = self.n, self.d
        mask = np.zeros((2 * n, 2 * n), dtype=bool)
        if self.params.x == "U":
            mask[n : 2 * n - d, 0:d] = True
            mask[2 * n - d : 2 * n, 0:n] = True
        else:
            mask[n : n + d, 0:n] = True
            mask[n + d : 2 * n, 0:d] = True
        mask.setflags(write=False)
        return mask

    # -- raw ambient builders (arrays of codes) -------------------------

    def _coerce_block(self, data, shape) -> np.ndarray:
        if isinstance(data, FfMatrix):
            if data.field != self.field:
                raise ValueError("block over the wrong field")
            codes = data.codes
        elif isinstance(data, np.ndarray):
            codes = FfMatrix.from_codes(self.field, data).codes
        else:
            codes = FfMatrix(self.field, data).codes
        if codes.shape != shape:
            raise ValueError(f"block shape {codes.shape} where {shape} expected")
        return codes

    def _h_ambient(self, A: np.ndarray) -> np.ndarray:
        n, d = self.n, self.d
        M = np.eye(2 * n, dtype=np.int16)
        M[0:d, d:n] = A
        if self.params.x == "U":
            M[n : 2 * n - d, 2 * n - d : 2 * n] = _j_conj_t(self.field, A)
        else:
            M[n + d : 2 * n, n : n + d] = self.field._neg[A.T]
        return M

    def _a_ambient(self, b1: np.ndarray, b2: np.ndarray) -> np.ndarray:
        n, d = self.n, self.d
        M = np.eye(2 * n, dtype=np.int16)
        if self.params.x == "C":
            M[0:d, n : n + d] = b1
            M[0:d, n + d : 2 * n] = b2
            M[d:n, n : n + d] = b2.T
        elif self.params.x == "D":
            M[0:d, n : n + d] = b1
            M[0:d, n + d : 2 * n] = b2
            M[d:n, n : n + d] = self.field._neg[b2.T]
        else:
            M[0:d, n : 2 * n - d] = b1
            M[0:d, 2 * n - d : 2 * n] = b2
            M[d:n, 2 * n - d : 2 * n] = _j_conj_t(self.field, b1)
        return M

    # -- element constructors -------------------------------------------

    def element(self, b1, b2, a) -> "RadicalElement":
        """The element a(V) h(A) from the free blocks of V and A.

        For types C and D: b1 is the d-by-d symmetric (skew) block, b2
        the free d-by-(n-d) block.  For type U: b1 is the free
        d-by-(n-d) block, b2 the d-by-d block with b2 J_d
        skew-Hermitian.  a is the H-parameter (A or A1).
        """
        n, d = self.n, self.d
        b1c = self._coerce_block(b1, (d, d) if self.params.x != "U" else (d, n - d))
        b2c = self._coerce_block(b2, (d, n - d) if self.params.x != "U" else (d, d))
        ac = self._coerce_block(a, (d, n - d))
        self._validate_group_blocks(b1c, b2c)
        return RadicalElement(self, b1c, b2c, ac)

    def _validate_group_blocks(self, b1: np.ndarray, b2: np.ndarray) -> None:
        f = self.field
        if self.params.x == "C":
            if not np.array_equal(b1, b1.T):
                raise ValueError("b1 must be symmetric")
        elif self.params.x == "D":
            if not np.array_equal(b1, f._neg[b1.T]):
                raise ValueError("b1 must be skew-symmetric")
        else:
            b2j = b2[:, ::-1]  # B2 J_d
            if not np.array_equal(b2j, f._neg[f._frob[b2j.T]]):
                raise ValueError("b2 J must be skew-Hermitian")

    def identity(self) -> "RadicalElement":
        n, d = self.n, self.d
        z = np.zeros
        if self.params.x == "U":
            return RadicalElement(self, z((d, n - d), dtype=np.int16), z((d, d), dtype=np.int16), z((d, n - d), dtype=np.int16))
        return RadicalElement(self, z((d, d), dtype=np.int16), z((d, n - d), dtype=np.int16), z((d, n - d), dtype=np.int16))

    def h_element(self, a) -> "RadicalElement":
        e = self.identity()
        return self.element(e._b1, e._b2, a)

    def a_element(self, b1, b2) -> "RadicalElement":
        n, d = self.n, self.d
        return self.element(b1, b2, np.zeros((d, n - d), dtype=np.int16))

    def _free_matrix_blocks(self, shape):
        from itertools import product as iproduct

        rows, cols = shape
        codes = range(self.field.q)
        for combo in iproduct(codes, repeat=rows * cols):
            yield np.array(combo, dtype=np.int16).reshape(shape)

    def _a_block_pairs(self):
        n, d = self.n, self.d
        if self.params.x == "C":
            first = (M.codes for M in enumerate_class(d, SymmetryClass.SYMMETRIC, self.field))
            second = list(self._free_matrix_blocks((d, n - d)))
        elif self.params.x == "D":
            first = (M.codes for M in enumerate_class(d, SymmetryClass.SKEW_SYMMETRIC, self.field))
            second = list(self._free_matrix_blocks((d, n - d)))
        else:
            first = self._free_matrix_blocks((d, n - d))
            second = [S.codes[:, ::-1] for S in enumerate_class(d, SymmetryClass.SKEW_HERMITIAN, self.field)]
        for b1 in first:
            for b2 in second:
                yield b1, b2

    def elements(self):
        """All group elements, in a fixed enumeration order."""
        n, d = self.n, self.d
        h_blocks = list(self._free_matrix_blocks((d, n - d)))
        for b1, b2 in self._a_block_pairs():
            for a in h_blocks:
                yield RadicalElement(self, b1, b2, a)

    def h_elements(self):
        for a in self._free_matrix_blocks((self.d, self.n - self.d)):
            yield self.h_element(a)

    def h_generators(self) -> list["RadicalElement"]:
        """One-parameter H-elements generating H as a group."""
        n, d = self.n, self.d
        gens = []
        basis_codes = [self.field.p ** k for k in range(self.field.degree)]
        for i in range(d):
            for j in range(n - d):
                for b in basis_codes:
                    A = np.zeros((d, n - d), dtype=np.int16)
                    A[i, j] = b
                    gens.append(self.h_element(A))
        return gens

    def generators(self) -> list["RadicalElement"]:
        """One-parameter elements generating all of R_u."""
        gens = list(self.h_generators())
        zero1 = np.zeros_like(self.identity()._b1)
        zero2 = np.zeros_like(self.identity()._b2)
        basis_codes = [self.field.p ** k for k in range(self.field.degree)]
        # b1 directions
        if self.params.x == "U":
            for i in range(self.d):
                for j in range(self.n - self.d):
                    for b in basis_codes:
                        b1 = zero1.copy()
                        b1[i, j] = b
                        gens.append(self.a_element(b1, zero2))
        else:
            f = self.field
            for i in range(self.d):
                for j in range(i, self.d):
                    if i == j and self.params.x == "D":
                        continue
                    for b in basis_codes:
                        b1 = zero1.copy()
                        b1[i, j] = b
                        b1[j, i] = b if self.params.x == "C" else f._neg[b]
                        gens.append(self.a_element(b1, zero2))
        # b2 directions
        if self.params.x == "U":
            f = self.field
            Q = self.base_field.q
            for i in range(self.d):
                for j in range(i, self.d):
                    scalars = [c * Q for c in [self.base_field.p ** k for k in range(self.base_field.degree)]] if i == j else [f.p ** k for k in range(f.degree)]
                    for s in scalars:
                        S = np.zeros((self.d, self.d), dtype=np.int16)
                        S[i, j] = s
                        if i != j:
                            S[j, i] = f._neg[f._frob[s]]
                        gens.append(self.a_element(zero1, S[:, ::-1]))
        else:
            for i in range(self.d):
                for j in range(self.n - self.d):
                    for b in basis_codes:
                        b2 = zero2.copy()
                        b2[i, j] = b
                        gens.append(self.a_element(zero1, b2))
        return gens

    # -- dual space -------------------------------------------------------

    def dual(self, b1, b3, b2) -> "DualElement":
        """A dual element from its three blocks (validated)."""
        n, d = self.n, self.d
        if self.params.x == "U":
            b1c = self._coerce_block(b1, (n - d, d))
            b3c = self._coerce_block(b3, (d, n - d))
            b2c = self._coerce_block(b2, (d, d))
        else:
            b1c = self._coerce_block(b1, (d, d))
            b3c = self._coerce_block(b3, (d, n - d))
            b2c = self._coerce_block(b2, (n - d, d))
        self._validate_dual_blocks(b1c, b3c, b2c)
        return DualElement(self, b1c, b3c, b2c)

    def dual_from_free(self, first, second) -> "DualElement":
        """Dual element from free blocks: (b1, b2) for C and D, (b2, b3) for U."""
        f = self.field
        n, d = self.n, self.d
        if self.params.x == "C":
            b1 = self._coerce_block(first, (d, d))
            b2 = self._coerce_block(second, (n - d, d))
            return self.dual(b1, b2.T, b2)
        if self.params.x == "D":
            b1 = self._coerce_block(first, (d, d))
            b2 = self._coerce_block(second, (n - d, d))
            return self.dual(b1, f._neg[b2.T], b2)
        b2 = self._coerce_block(first, (d, d))
        b3 = self._coerce_block(second, (d, n - d))
        return self.dual(_j_conj_t(f, b3), b3, b2)

    def _validate_dual_blocks(self, b1, b3, b2) -> None:
        f = self.field
        if self.params.x == "C":
            if not np.array_equal(b1, b1.T):
                raise ValueError("b1 must be symmetric")
            if not np.array_equal(b3, b2.T):
                raise ValueError("b3 must equal b2 transposed")
        elif self.params.x == "D":
            if not np.array_equal(b1, f._neg[b1.T]):
                raise ValueError("b1 must be skew-symmetric")
            if not np.array_equal(b3, f._neg[b2.T]):
                raise ValueError("b3 must equal minus b2 transposed")
        else:
            b2j = b2[:, ::-1]
            if not np.array_equal(b2j, f._neg[f._frob[b2j.T]]):
                raise ValueError("b2 J must be skew-Hermitian")
            if not np.array_equal(b1, _j_conj_t(f, b3)):
                raise ValueError("b1 must be the twisted transpose of b3")

    def duals(self):
        """All dual elements, in a fixed enumeration order."""
        n, d = self.n, self.d
        if self.params.x == "U":
            b3s = list(self._free_matrix_blocks((d, n - d)))
            for S in enumerate_class(d, SymmetryClass.SKEW_HERMITIAN, self.field):
                b2 = S.codes[:, ::-1]
                for b3 in b3s:
                    yield self.dual_from_free(b2, b3)
        else:
            cls = SymmetryClass.SYMMETRIC if self.params.x == "C" else SymmetryClass.SKEW_SYMMETRIC
            b2s = list(self._free_matrix_blocks((n - d, d)))
            for M in enumerate_class(self.d, cls, self.field):
                for b2 in b2s:
                    yield self.dual_from_free(M.codes, b2)

    def dual_count(self) -> int:
        return self.q ** self.params.a_exponent

    def _dual_ambient(self, b1, b3, b2) -> np.ndarray:
        n, d = self.n, self.d
        M = np.zeros((2 * n, 2 * n), dtype=np.int16)
        if self.params.x == "U":
            M[n : 2 * n - d, 0:d] = b1
            M[2 * n - d : 2 * n, 0:d] = b2
            M[2 * n - d : 2 * n, d:n] = b3
        else:
            M[n : n + d, 0:d] = b1
            M[n : n + d, d:n] = b3
            M[n + d : 2 * n, 0:d] = b2
        return M

    def _decompose_dual(self, M: np.ndarray) -> "DualElement":
        n, d = self.n, self.d
        assert not M[~self._mask].any(), "dual support violation"
        if self.params.x == "U":
            b1 = M[n : 2 * n - d, 0:d]
            b3 = M[2 * n - d : 2 * n, d:n]
            b2 = M[2 * n - d : 2 * n, 0:d]
        else:
            b1 = M[n : n + d, 0:d]
            b3 = M[n : n + d, d:n]
            b2 = M[n + d : 2 * n, 0:d]
        self._validate_dual_blocks(b1, b3, b2)
        return DualElement(self, b1, b3, b2)

    def _decompose(self, M: np.ndarray) -> "RadicalElement":
        n, d = self.n, self.d
        f = self.field
        assert not M[n : 2 * n, 0:n].any(), "lower-left block must vanish"
        P = M[0:n, 0:n]
        Q = M[0:n, n : 2 * n]
        R = M[n : 2 * n, n : 2 * n]
        A = np.array(P[0:d, d:n])
        assert np.array_equal(P, self._h_ambient(A)[0:n, 0:n]), "upper-left block is not unitriangular of the expected form"
        if self.params.x == "U":
            A2 = R[0 : n - d, n - d : n]
            assert np.array_equal(A2, _j_conj_t(f, A)), "linked block mismatch"
            Ninv = np.eye(n, dtype=np.int16)
            Ninv[0 : n - d, n - d : n] = f._neg[A2]
        else:
            assert np.array_equal(R[d:n, 0:d], f._neg[A.T]), "linked block mismatch"
            Ninv = np.eye(n, dtype=np.int16)
            Ninv[d:n, 0:d] = A.T
        assert np.array_equal(R, self._h_ambient(A)[n : 2 * n, n : 2 * n]), "lower-right block is not of the expected form"
        V = _mm(f, Q, Ninv)
        if self.params.x == "U":
            assert not V[d:n, 0 : n - d].any(), "V block support violation"
            b1 = V[0:d, 0 : n - d]
            b2 = V[0:d, n - d : n]
            b3 = V[d:n, n - d : n]
            assert np.array_equal(b3, _j_conj_t(f, b1)), "V blocks violate the twisted link"
        else:
            assert not V[d:n, d:n].any(), "V block support violation"
            b1 = V[0:d, 0:d]
            b2 = V[0:d, d:n]
            b3 = V[d:n, 0:d]
            if self.params.x == "C":
                assert np.array_equal(V, V.T), "V must be symmetric"
            else:
                assert np.array_equal(V, f._neg[V.T]), "V must be skew-symmetric"
        self._validate_group_blocks(np.array(b1), np.array(b2))
        return RadicalElement(self, np.array(b1), np.array(b2), A)

    def __repr__(self) -> str:
        p = self.params
        return f"RadicalContext({p.x}, n={p.n}, d={p.d}, q={self.q})"


class RadicalElement:
    """A group element a(V) h(A), stored by its free parameter blocks."""

    __slots__ = ("ctx", "_b1", "_b2", "_a")

    def __init__(self, ctx: RadicalContext, b1: np.ndarray, b2: np.ndarray, a: np.ndarray):
        self.ctx = ctx
        self._b1 = b1
        self._b2 = b2
        self._a = a

    @property
    def v_b1(self) -> FfMatrix:
        return FfMatrix.from_codes(self.ctx.field, self._b1)

    @property
    def v_b2(self) -> FfMatrix:
        return FfMatrix.from_codes(self.ctx.field, self._b2)

    @property
    def h_a(self) -> FfMatrix:
        return FfMatrix.from_codes(self.ctx.field, self._a)

    def ambient(self) -> FfMatrix:
        return FfMatrix.from_codes(self.ctx.field, self._ambient_codes())

    def _ambient_codes(self) -> np.ndarray:
        ctx = self.ctx
        return _mm(ctx.field, ctx._a_ambient(self._b1, self._b2), ctx._h_ambient(self._a))

    def key(self) -> bytes:
        return self._b1.tobytes() + self._b2.tobytes() + self._a.tobytes()

    def __eq__(self, other) -> bool:
        if not isinstance(other, RadicalElement):
            return NotImplemented
        return (
            self.ctx.params == other.ctx.params
            and self.ctx.q == other.ctx.q
            and np.array_equal(self._b1, other._b1)
            and np.array_equal(self._b2, other._b2)
            and np.array_equal(self._a, other._a)
        )

    def __hash__(self) -> int:
        return hash((self.ctx.params, self.ctx.q, self.key()))

    def __repr__(self) -> str:
        return f"RadicalElement(b1={self._b1.tolist()}, b2={self._b2.tolist()}, a={self._a.tolist()})"


class DualElement:
    """A dual (lower-left) element, stored by its three blocks."""

    __slots__ = ("ctx", "_b1", "_b3", "_b2")

    def __init__(self, ctx: RadicalContext, b1: np.ndarray, b3: np.ndarray, b2: np.ndarray):
        self.ctx = ctx
        self._b1 = b1
        self._b3 = b3
        self._b2 = b2

    @property
    def b1(self) -> FfMatrix:
        return FfMatrix.from_codes(self.ctx.field, self._b1)

    @property
    def b3(self) -> FfMatrix:
        return FfMatrix.from_codes(self.ctx.field, self._b3)

    @property
    def b2(self) -> FfMatrix:
        return FfMatrix.from_codes(self.ctx.field, self._b2)

    def ambient(self) -> FfMatrix:
        return FfMatrix.from_codes(self.ctx.field, self._ambient_codes())

    def _ambient_codes(self) -> np.ndarray:
        return self.ctx._dual_ambient(self._b1, self._b3, self._b2)

    def key(self) -> bytes:
        return self._b1.tobytes() + self._b3.tobytes() + self._b2.tobytes()

    def __eq__(self, other) -> bool:
        if not isinstance(other, DualElement):
            return NotImplemented
        return (
            self.ctx.params == other.ctx.params
            and self.ctx.q == other.ctx.q
            and np.array_equal(self._b1, other._b1)
            and np.array_equal(self._b3, other._b3)
            and np.array_equal(self._b2, other._b2)
        )

    def __hash__(self) -> int:
        return hash((self.ctx.params, self.ctx.q, self.key()))

    def __repr__(self) -> str:
        return f"DualElement(b1={self._b1.tolist()}, b3={self._b3.tolist()}, b2={self._b2.tolist()})"


def _same_ctx(a, b) -> RadicalContext:
    if a.ctx.params != b.ctx.params or a.ctx.q != b.ctx.q:
        raise ValueError("elements from different radical groups")
    return a.ctx


def group_mul(g: RadicalElement, h: RadicalElement) -> RadicalElement:
    """Product in R_u, with closure of the block shape asserted."""
    ctx = _same_ctx(g, h)
    return ctx._decompose(_mm(ctx.field, g._ambient_codes(), h._ambient_codes()))


def group_inv(g: RadicalElement) -> RadicalElement:
    """Inverse in R_u: h(-A) a(-V) rewritten in canonical a(V') h(A') form."""
    ctx = g.ctx
    f = ctx.field
    ha = ctx._h_ambient(f._neg[g._a])
    aa = ctx._a_ambient(f._neg[g._b1], f._neg[g._b2])
    return ctx._decompose(_mm(f, ha, aa))


def coadjoint_act(g: RadicalElement, alpha: DualElement) -> DualElement:
    """g . alpha = projection of g alpha g^(-1) onto the dual support."""
    ctx = _same_ctx(g, alpha)
    gi = group_inv(g)
    M = _mm(ctx.field, _mm(ctx.field, g._ambient_codes(), alpha._ambient_codes()), gi._ambient_codes())
    P = np.where(ctx._mask, M, np.int16(0))
    return ctx._decompose_dual(P)


def coefficient_matrix(alpha: DualElement) -> FfMatrix:
    """Block diagonal stabilizer system: n-d copies of b1 (C, D) or b2 (U)."""
    ctx = alpha.ctx
    n, d = ctx.n, ctx.d
    block = alpha._b2 if ctx.params.x == "U" else alpha._b1
    size = d * (n - d)
    M = np.zeros((size, size), dtype=np.int16)
    for c in range(n - d):
        M[c * d : (c + 1) * d, c * d : (c + 1) * d] = block
    return FfMatrix.from_codes(ctx.field, M, copy=False)


@dataclass(frozen=True)
class OrbitRecord:
    representative: DualElement
    size: int
    stabilizer_order: int
    e: int

    @property
    def degree(self) -> int:
        return self.representative.ctx.k_order ** self.e


def _exact_log(value: int, base: int) -> int:
    e, acc = 0, 1
    while acc < value:
        acc *= base
        e += 1
    if acc != value:
        raise ValueError(f"{value} is not a power of {base}")
    return e


def _h_gen_ambients(ctx: RadicalContext) -> list[tuple[np.ndarray, np.ndarray]]:
    return [(g._ambient_codes(), group_inv(g)._ambient_codes()) for g in ctx.h_generators()]


def _orbit_member_keys(alpha: DualElement, gen_codes) -> set[bytes]:
    ctx = alpha.ctx
    f = ctx.field
    start = alpha._ambient_codes()
    seen = {start.tobytes()}
    queue = [start]
    while queue:
        S = queue.pop()
        for gm, gi in gen_codes:
            M = _mm(f, _mm(f, gm, S), gi)
            P = np.where(ctx._mask, M, np.int16(0))
            k = P.tobytes()
            if k not in seen:
                seen.add(k)
                queue.append(P)
    return seen


def _record_for(alpha: DualElement, size: int) -> OrbitRecord:
    ctx = alpha.ctx
    h_order = ctx.q ** ctx.params.h_exponent
    e = _exact_log(size, ctx.k_order)
    assert h_order % size == 0, "orbit size must divide the acting group order"
    assert e == rank(coefficient_matrix(alpha)), "orbit size must match the stabilizer system rank"
    return OrbitRecord(alpha, size, h_order // size, e)


def orbit_of(alpha: DualElement, budget: int = DEFAULT_ORBIT_BUDGET) -> OrbitRecord:
    """BFS orbit of a dual element under the H-coadjoint action."""
    ctx = alpha.ctx
    h_order = ctx.q ** ctx.params.h_exponent
    if h_order > budget:
        raise ValueError(f"enumeration too large: orbit bound {h_order} exceeds budget {budget}")
    members = _orbit_member_keys(alpha, _h_gen_ambients(ctx))
    return _record_for(alpha, len(members))


def orbit_partition(ctx: RadicalContext, budget: int = DEFAULT_ORBIT_BUDGET) -> list[OrbitRecord]:
    """Partition of the whole dual space into coadjoint orbits."""
    if ctx.dual_count() > budget:
        raise ValueError(f"enumeration too large: {ctx.dual_count()} duals exceeds budget {budget}")
    gen_codes = _h_gen_ambients(ctx)
    records = []
    seen: set[bytes] = set()
    for alpha in ctx.duals():
        if alpha._ambient_codes().tobytes() in seen:
            continue
        members = _orbit_member_keys(alpha, gen_codes)
        records.append(_record_for(alpha, len(members)))
        seen |= members
    assert sum(r.size for r in records) == ctx.dual_count(), "orbits must partition the dual space"
    return records


@dataclass(frozen=True)
class OrbitCensusRow:
    e: int
    degree: int
    dual_count: int
    orbit_count: int
    char_count: int


@dataclass(frozen=True)
class OrbitCensus:
    params: RadicalParams
    q: int
    k_order: int
    rows: tuple[OrbitCensusRow, ...]

    @property
    def by_e(self) -> dict[int, OrbitCensusRow]:
        return {r.e: r for r in self.rows}

    def total_chars(self) -> int:
        return sum(r.char_count for r in self.rows)

    def sum_of_squares(self) -> int:
        return sum(r.char_count * r.degree ** 2 for r in self.rows)


def orbit_census(params: RadicalParams, q, budget: int = DEFAULT_ORBIT_BUDGET) -> OrbitCensus:
    """Numeric census of coadjoint orbits and character degrees over F_q.

    Walks every dual element, buckets by the rank e of its stabilizer
    system, and converts bucket sizes to orbit and character counts.
    """
    ctx = q if isinstance(q, RadicalContext) else RadicalContext(params, q)
    if ctx.params != params:
        raise ValueError("context parameters do not match")
    if ctx.dual_count() > budget:
        raise ValueError(f"enumeration too large: {ctx.dual_count()} duals exceeds budget {budget}")
    h_order = ctx.q ** params.h_exponent
    buckets: dict[int, int] = {}
    for alpha in ctx.duals():
        e = rank(coefficient_matrix(alpha))
        buckets[e] = buckets.get(e, 0) + 1
    rows = []
    for e in sorted(buckets):
        count = buckets[e]
        k_e = ctx.k_order ** e
        assert count % k_e == 0, "bucket size must be divisible by the orbit size"
        assert (count * h_order) % (k_e * k_e) == 0, "character count must be integral"
        rows.append(
            OrbitCensusRow(
                e=e,
                degree=k_e,
                dual_count=count,
                orbit_count=count // k_e,
                char_count=count * h_order // (k_e * k_e),
            )
        )
    census = OrbitCensus(params=params, q=ctx.q, k_order=ctx.k_order, rows=tuple(rows))
    assert sum(r.dual_count for r in rows) == ctx.dual_count()
    assert census.sum_of_squares() == ctx.q ** params.order_exponent, "sum of squared degrees must equal the group order"
    return census


def class_count_brute(params: RadicalParams, q, budget: int = DEFAULT_CLASS_BUDGET) -> int:
    """Number of conjugacy classes of R_u by exhaustive enumeration.

    Completely independent of the orbit machinery: enumerates all group
    elements as ambient matrices and partitions them into conjugacy
    classes under one-parameter generators.
    """
    ctx = q if isinstance(q, RadicalContext) else RadicalContext(params, q)
    if ctx.params != params:
        raise ValueError("context parameters do not match")
    order = ctx.q ** params.order_exponent
    if order > budget:
        raise ValueError(f"enumeration too large: group order {order} exceeds budget {budget}")
    f = ctx.field
    gen_codes = [(g._ambient_codes(), group_inv(g)._ambient_codes()) for g in ctx.generators()]
    all_keys: dict[bytes, np.ndarray] = {}
    for el in ctx.elements():
        M = el._ambient_codes()
        all_keys[M.tobytes()] = M
    assert len(all_keys) == order, "element enumeration must hit the full group order"
    unvisited = set(all_keys)
    classes = 0
    while unvisited:
        start_key = unvisited.pop()
        classes += 1
        queue = [all_keys[start_key]]
        while queue:
            X = queue.pop()
            for gm, gi in gen_codes:
                Y = _mm(f, _mm(f, gm, X), gi)
                k = Y.tobytes()
                if k in unvisited:
                    unvisited.remove(k)
                    queue.append(all_keys[k])
    return classes


def pairing_nondegeneracy_check(params: RadicalParams, q) -> bool:
    """Gram-matrix invertibility of the trace pairing on Lie(A) x Lie(A)^t.

    Types C and D use tr(XY); type U uses the twisted form
    tr(XY) + tr(XY)^q, which takes values in the base field.
    """
    ctx = q if isinstance(q, RadicalContext) else RadicalContext(params, q)
    if ctx.params != params:
        raise ValueError("context parameters do not match")
    basis = _lie_a_basis(ctx)
    if not basis:
        return True
    pairing = twisted_trace_pairing if params.x == "U" else trace_pairing
    G = gram_matrix(basis, [M.T for M in basis], pairing)
    return rank(G) == len(basis)


def _lie_a_basis(ctx: RadicalContext) -> list[FfMatrix]:
    """A basis of Lie(A) over F_q (the base field), as ambient matrices.

    The pairing downstream is F_q-bilinear, so the basis must be an
    F_q-basis: scalar 1 for types C and D, the pair {1, t} per free
    entry (and t alone on the constrained diagonal) for type U.
    """
    n, d = ctx.n, ctx.d
    f = ctx.field
    out = []

    def lie(b1, b2):
        M = ctx._a_ambient(b1, b2)
        M = f._sub[M, np.eye(2 * n, dtype=np.int16)]
        return FfMatrix.from_codes(f, M, copy=False)

    if ctx.params.x == "U":
        zero1 = np.zeros((d, n - d), dtype=np.int16)
        zero2 = np.zeros((d, d), dtype=np.int16)
        Q = ctx.base_field.q
        scalars = [1, Q]
        for i in range(d):
            for j in range(n - d):
                for s in scalars:
                    b1 = zero1.copy()
                    b1[i, j] = s
                    out.append(lie(b1, zero2))
        for i in range(d):
            for j in range(i, d):
                svals = [Q] if i == j else scalars
                for s in svals:
                    S = np.zeros((d, d), dtype=np.int16)
                    S[i, j] = s
                    if i != j:
                        S[j, i] = f._neg[f._frob[s]]
                    out.append(lie(zero1, S[:, ::-1]))
    else:
        zero1 = np.zeros((d, d), dtype=np.int16)
        zero2 = np.zeros((d, n - d), dtype=np.int16)
        for i in range(d):
            for j in range(i, d):
                if i == j and ctx.params.x == "D":
                    continue
                b1 = zero1.copy()
                b1[i, j] = 1
                b1[j, i] = 1 if ctx.params.x == "C" else f._neg[1]
                out.append(lie(b1, zero2))
        for i in range(d):
            for j in range(n - d):
                b2 = zero2.copy()
                b2[i, j] = 1
                out.append(lie(zero1, b2))
    return out


def dual_index(ctx: RadicalContext):
    """All duals in enumeration order plus a key -> position lookup."""
    duals = list(ctx.duals())
    index = {alpha._ambient_codes().tobytes(): i for i, alpha in enumerate(duals)}
    return duals, index


def coadjoint_permutation(ctx: RadicalContext, g: RadicalElement, duals=None, index=None) -> np.ndarray:
    """The permutation a dual index experiences under one group element."""
    if duals is None or index is None:
        duals, index = dual_index(ctx)
    gi = group_inv(g)
    gm, gic = g._ambient_codes(), gi._ambient_codes()
    f = ctx.field
    perm = np.empty(len(duals), dtype=np.int64)
    for i, alpha in enumerate(duals):
        M = _mm(f, _mm(f, gm, alpha._ambient_codes()), gic)
        P = np.where(ctx._mask, M, np.int16(0))
        perm[i] = index[P.tobytes()]
    return perm
