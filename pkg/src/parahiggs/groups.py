"""Classical group bookkeeping and split bilinear forms over Q.

The three families are tagged "sp" (Sp(2m)), "so-even" (SO(2m)) and
"so-odd" (SO(2m+1)).  Split Gram matrices are fixed once:

    sp      J = [[0, I], [-I, 0]]           (antisymmetric)
    so-even B = [[0, I], [I, 0]]            (symmetric)
    so-odd  B = [[0, I, 0], [I, 0, 0], [0, 0, 1]]

Over Q a definite symmetric form has no isotropic vectors and hence no
nonzero nilpotent elements in its algebra; the split models carry the
upper-triangular nilpotents needed for parabolic residues.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .linalg import (
    Mat,
    SingularMatrixError,
    identity,
    is_zero_matrix,
    mat_add,
    mat_from_scalars,
    mat_inverse,
    mat_mul,
    mat_sub,
    rf,
    transpose,
    zero_matrix,
)
from .poly import RationalFunction

GROUP_KINDS = ("sp", "so-even", "so-odd")


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class GroupSpec:
    """One of Sp(2m), SO(2m), SO(2m+1) with its derived dimension data."""

    kind: str
    m: int

    def __post_init__(self):
        if self.kind not in GROUP_KINDS:
            raise GroupError(f"unknown group kind {self.kind!r}")
        if self.m < 1:
            raise GroupError("m must be >= 1")

    @staticmethod
    def sp(m: int) -> "GroupSpec":
        return GroupSpec("sp", m)

    @staticmethod
    def so_even(m: int) -> "GroupSpec":
        return GroupSpec("so-even", m)

    @staticmethod
    def so_odd(m: int) -> "GroupSpec":
        return GroupSpec("so-odd", m)

    @property
    def rank_size(self) -> int:
        """Matrix size r: 2m, or 2m+1 for so-odd."""
        return 2 * self.m + (1 if self.kind == "so-odd" else 0)

    @property
    def dim_group(self) -> int:
        m = self.m
        return m * (2 * m - 1) if self.kind == "so-even" else m * (2 * m + 1)

    @property
    def dim_borel(self) -> int:
        m = self.m
        return m * m if self.kind == "so-even" else m * m + m

    @property
    def dim_flag(self) -> int:
        """dim G/B, the full-flag contribution per marked point."""
        return self.dim_group - self.dim_borel


@dataclass(frozen=True)
class GramForm:
    """Invertible Gram matrix over Q(t), antisymmetric or symmetric."""

    matrix: tuple[tuple[RationalFunction, ...], ...]
    kind: str  # "symplectic" | "symmetric"

    def __post_init__(self):
        n = len(self.matrix)
        if any(len(row) != n for row in self.matrix):
            raise ValueError("Gram matrix must be square")
        if self.kind not in ("symplectic", "symmetric"):
            raise ValueError(f"unknown form kind {self.kind!r}")
        for i in range(n):
            for j in range(n):
                want = -self.matrix[j][i] if self.kind == "symplectic" else self.matrix[j][i]
                if self.matrix[i][j] != want:
                    raise ValueError(f"Gram matrix is not {self.kind}")
        try:
            mat_inverse(self.as_mat())
        except SingularMatrixError:
            raise ValueError("Gram matrix is degenerate") from None

    @staticmethod
    def make(rows, kind: str) -> "GramForm":
        rows = [[x if isinstance(x, RationalFunction) else rf(x) for x in row] for row in rows]
        return GramForm(tuple(tuple(row) for row in rows), kind)

    @property
    def size(self) -> int:
        return len(self.matrix)

    def as_mat(self) -> Mat:
        return [list(row) for row in self.matrix]

    def to_json(self) -> list[list[dict]]:
        return [[x.to_json() for x in row] for row in self.matrix]

    @staticmethod
    def from_json(data, kind: str) -> "GramForm":
        return GramForm.make(
            [[RationalFunction.from_json(x) for x in row] for row in data], kind
        )


def split_gram(group: GroupSpec) -> GramForm:
    """The fixed split Gram model for the group."""
    m = group.m
    if group.kind == "sp":
        rows = [[0] * 2 * m for _ in range(2 * m)]
        for i in range(m):
            rows[i][m + i] = 1
            rows[m + i][i] = -1
        return GramForm.make(rows, "symplectic")
    n = group.rank_size
    rows = [[0] * n for _ in range(n)]
    for i in range(m):
        rows[i][m + i] = 1
        rows[m + i][i] = 1
    if group.kind == "so-odd":
        rows[2 * m][2 * m] = 1
    return GramForm.make(rows, "symmetric")


def check_lie_membership(mat: Mat, gram: GramForm) -> bool:
    """True iff mat^T B + B mat = 0 identically over Q(t)."""
    n = len(mat)
    if any(len(row) != n for row in mat) or n != gram.size:
        raise ValueError("matrix size does not match the Gram form")
    b = gram.as_mat()
    return is_zero_matrix(mat_add(mat_mul(transpose(mat), b), mat_mul(b, mat)))


def cayley_group_element(a: Mat, gram: GramForm) -> Mat:
    """Q = (I - A)(I + A)^(-1); preserves the Gram form exactly.

    A must lie in the algebra of the form and I + A must be invertible.
    """
    if not check_lie_membership(a, gram):
        raise GroupError("input is not in the Lie algebra of the form")
    n = len(a)
    try:
        inv = mat_inverse(mat_add(identity(n), a))
    except SingularMatrixError:
        raise SingularMatrixError("Cayley pole") from None
    return mat_mul(mat_sub(identity(n), a), inv)


# -- random elements ----------------------------------------------------------
#
# Block parametrization with the split Grams above (blocks of size m; v, w
# column vectors; Q_s symmetric, Q_a/R_a antisymmetric, P arbitrary):
#
#   sp      [[P, Q_s], [R_s, -P^T]]
#   so-even [[P, Q_a], [R_a, -P^T]]
#   so-odd  [[P, Q_a, v], [R_a, -P^T, w], [-w^T, -v^T, 0]]
#
# The strictly-upper-triangular members of each algebra form the abelian
# subspace {P = R = 0 (and v = w = 0), upper block as above}; conjugates of
# its draws supply the nilpotent residues of generated Higgs fields.


def _assemble(group: GroupSpec, p, q, r, v=None, w=None) -> list[list[Fraction]]:
    m = group.m
    n = group.rank_size
    out = [[Fraction(0)] * n for _ in range(n)]
    for i in range(m):
        for j in range(m):
            out[i][j] = Fraction(p[i][j])
            out[i][m + j] = Fraction(q[i][j])
            out[m + i][j] = Fraction(r[i][j])
            out[m + i][m + j] = Fraction(-p[j][i])
    if group.kind == "so-odd":
        for i in range(m):
            out[i][2 * m] = Fraction(v[i])
            out[m + i][2 * m] = Fraction(w[i])
            out[2 * m][i] = Fraction(-w[i])
            out[2 * m][m + i] = Fraction(-v[i])
    return out


def _sym_block(rng: random.Random, m: int, lo: int, hi: int, anti: bool):
    b = [[0] * m for _ in range(m)]
    for i in range(m):
        if not anti:
            b[i][i] = rng.randint(lo, hi)
        for j in range(i + 1, m):
            x = rng.randint(lo, hi)
            b[i][j] = x
            b[j][i] = -x if anti else x
    return b


def random_algebra_element(group: GroupSpec, rng: random.Random, lo: int = -2, hi: int = 2) -> Mat:
    """Seeded random element of the split-form Lie algebra (integer entries)."""
    m = group.m
    anti = group.kind != "sp"
    p = [[rng.randint(lo, hi) for _ in range(m)] for _ in range(m)]
    q = _sym_block(rng, m, lo, hi, anti)
    r = _sym_block(rng, m, lo, hi, anti)
    v = w = None
    if group.kind == "so-odd":
        v = [rng.randint(lo, hi) for _ in range(m)]
        w = [rng.randint(lo, hi) for _ in range(m)]
    return mat_from_scalars(_assemble(group, p, q, r, v, w))


def random_nilpotent_element(group: GroupSpec, rng: random.Random, lo: int = -3, hi: int = 3) -> Mat:
    """Seeded random strictly-upper-triangular member of the algebra.

    For so-odd with m = 1 (and so-even with m = 1) this space is zero, so
    the draw is the zero matrix; those algebras have no strictly upper
    triangular nilpotents in the fixed split basis.
    """
    m = group.m
    anti = group.kind != "sp"
    zero = [[0] * m for _ in range(m)]
    q = _sym_block(rng, m, lo, hi, anti)
    v = w = None
    if group.kind == "so-odd":
        v = [0] * m
        w = [0] * m
    return mat_from_scalars(_assemble(group, zero, q, zero, v, w))


def random_group_element(group: GroupSpec, gram: GramForm, rng: random.Random) -> Mat:
    """Cayley transform of a random algebra element; retries past Cayley poles."""
    while True:
        a = random_algebra_element(group, rng, -2, 2)
        try:
            return cayley_group_element(a, gram)
        except SingularMatrixError:
            continue
