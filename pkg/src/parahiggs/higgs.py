"""Higgs fields over Q(t): checkers, random generation, odd-rank reduction.

A Higgs field here is a square matrix over the rational function field,
lying in the algebra of a Gram form, with simple poles allowed only at the
marked points of the affine chart.  The checkers verify exactly (no
tolerances) the structural laws the three group families impose on the
characteristic coefficients: evenness, the Pfaffian square, nilpotency of
residues and the pole-order bounds.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .groups import (
    GramForm,
    GroupError,
    GroupSpec,
    check_lie_membership,
    random_algebra_element,
    random_group_element,
    random_nilpotent_element,
    split_gram,
)
from .linalg import (
    Mat,
    char_poly,
    kernel_basis,
    mat_det,
    mat_from_scalars,
    mat_inverse,
    mat_mul,
    pfaffian,
    rf,
)
from .poly import (
    Q,
    RationalFunction,
    UniPoly,
    poly_gcd,
    poly_lcm,
    q_from_str,
    q_to_str,
    root_multiplicity,
)


class PoleOrderError(ArithmeticError):
    pass


class NonGenericFieldError(ArithmeticError):
    pass


@dataclass(frozen=True)
class CharData:
    """Coefficients s_1..s_r of det(x*I - Phi) = x^r + s_1 x^(r-1) + ... + s_r."""

    coeffs: tuple[RationalFunction, ...]

    @property
    def r(self) -> int:
        return len(self.coeffs)

    def s(self, i: int) -> RationalFunction:
        """s_i, 1-based; s_0 = 1."""
        if i == 0:
            return rf(1)
        return self.coeffs[i - 1]

    def ascending(self) -> list[RationalFunction]:
        """Coefficients of the char polynomial ascending in x (monic top)."""
        return [self.s(self.r - k) for k in range(self.r)] + [rf(1)]


def char_data(mat: Mat) -> CharData:
    return CharData(tuple(char_poly(mat)))


@dataclass(eq=False)
class HiggsField:
    group: GroupSpec
    gram: GramForm
    matrix: Mat
    marked_points: tuple[Fraction, ...]
    _char: CharData | None = field(default=None, repr=False)

    def __post_init__(self):
        r = self.group.rank_size
        if len(self.matrix) != r or any(len(row) != r for row in self.matrix):
            raise ValueError(f"matrix must be {r}x{r} for {self.group.kind}, m={self.group.m}")
        if self.gram.size != r:
            raise ValueError("Gram form size does not match the group")
        self.marked_points = tuple(Fraction(a) for a in self.marked_points)
        if len(set(self.marked_points)) != len(self.marked_points):
            raise ValueError("duplicate marked points")

    def char_data(self) -> CharData:
        if self._char is None:
            self._char = char_data(self.matrix)
        return self._char

    def to_dict(self) -> dict:
        out = {
            "group": self.group.kind,
            "m": self.group.m,
            "marked_points": [q_to_str(a) for a in self.marked_points],
            "matrix": [[x.to_json() for x in row] for row in self.matrix],
        }
        if self.gram != split_gram(self.group):
            out["gram"] = self.gram.to_json()
        return out

    @staticmethod
    def from_dict(data: dict) -> "HiggsField":
        group = GroupSpec(data["group"], int(data["m"]))
        if "gram" in data:
            kind = "symplectic" if group.kind == "sp" else "symmetric"
            gram = GramForm.from_json(data["gram"], kind)
        else:
            gram = split_gram(group)
        matrix = [[RationalFunction.from_json(x) for x in row] for row in data["matrix"]]
        marked = tuple(q_from_str(s) for s in data["marked_points"])
        return HiggsField(group, gram, matrix, marked)


# -- residues and the strong-parabolicity law ---------------------------------


def residue_at(fld: HiggsField, a) -> list[list[Fraction]]:
    """Entrywise residue lim (t - a) * Phi_ij(t) at a marked point."""
    a = Fraction(a)
    if a not in fld.marked_points:
        raise ValueError(f"t = {a} is not a marked point")
    lin = UniPoly.linear_root(a)
    out = []
    for row in fld.matrix:
        orow = []
        for x in row:
            if x.is_zero or x.den(a) != 0:
                orow.append(Q(0))
                continue
            if root_multiplicity(x.den, a) > 1:
                raise PoleOrderError(f"pole of order > 1 at t = {a}")
            orow.append(x.num(a) / x.den.exact_div(lin)(a))
        out.append(orow)
    return out


def _fraction_mat_nilpotent(mat: list[list[Fraction]], power: int) -> bool:
    n = len(mat)
    cur = mat
    for _ in range(power - 1):
        if all(x == 0 for row in cur for x in row):
            return True
        cur = [
            [sum(cur[i][k] * mat[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ]
    return all(x == 0 for row in cur for x in row)


@dataclass(frozen=True)
class StrongParabolicResult:
    passed: bool
    failures: tuple[str, ...]


def strong_parabolic_check(fld: HiggsField) -> StrongParabolicResult:
    """Residue nilpotency at every marked point plus the pole bound
    ord_a(s_i) <= i - 1 on the characteristic coefficients."""
    failures: list[str] = []
    r = fld.group.rank_size
    for a in fld.marked_points:
        try:
            res = residue_at(fld, a)
        except PoleOrderError as exc:
            failures.append(str(exc))
            continue
        if not _fraction_mat_nilpotent(res, r):
            failures.append(f"residue at t = {a} is not nilpotent")
    char = fld.char_data()
    for i in range(1, r + 1):
        s_i = char.s(i)
        for a in fld.marked_points:
            order = s_i.pole_order_at(a)
            if order is not None and order > i - 1:
                failures.append(f"s_{i} has pole order {order} > {i - 1} at t = {a}")
    return StrongParabolicResult(not failures, tuple(failures))


# -- parity of the characteristic polynomial ----------------------------------


@dataclass(frozen=True)
class ParityResult:
    passed: bool
    first_odd_index: int | None
    even_coeffs: tuple[RationalFunction, ...]
    """Ascending x-coefficients of the even polynomial: the char polynomial
    itself for sp/so-even, its x-cofactor for so-odd."""


def parity_classify(char: CharData, group: GroupSpec) -> ParityResult:
    """PASS iff all odd-indexed s_i vanish identically (so the char is even,
    resp. x times an even polynomial for so-odd)."""
    r = group.rank_size
    if char.r != r:
        raise ValueError(f"char data has degree {char.r}, group needs {r}")
    bad = next((i for i in range(1, r + 1, 2) if not char.s(i).is_zero), None)
    asc = char.ascending()
    even = tuple(asc[1:]) if group.kind == "so-odd" else tuple(asc)
    if bad is not None:
        return ParityResult(False, bad, even)
    return ParityResult(True, None, even)


# -- Pfaffian square law -------------------------------------------------------


@dataclass(frozen=True)
class PfaffianSquareResult:
    passed: bool
    pfaffian: RationalFunction
    unit: RationalFunction
    """s_2m * unit == pfaffian^2, with unit = det(B) ( = (-1)^m for the split Gram)."""


def pfaffian_square_check(fld: HiggsField) -> PfaffianSquareResult:
    """For so-even fields: s_2m agrees with det(B) * Pf(B*Phi)^2 up to the
    det(B) unit, i.e. s_2m * det(B) == Pf(B*Phi)^2 identically."""
    if fld.group.kind != "so-even":
        raise GroupError("Pfaffian square law applies to so-even fields only")
    if not check_lie_membership(fld.matrix, fld.gram):
        raise ValueError("field is not in the Lie algebra of its Gram form")
    b = fld.gram.as_mat()
    p_m = pfaffian(mat_mul(b, fld.matrix))
    det_b = mat_det(b)
    s_top = fld.char_data().s(fld.group.rank_size)
    return PfaffianSquareResult(s_top * det_b == p_m * p_m, p_m, det_b)


# -- random field generation ---------------------------------------------------


def _constant_entry(x: RationalFunction) -> Fraction:
    return x.num.coeff(0)


def random_strongly_parabolic_higgs(
    group: GroupSpec,
    marked_points,
    degree_bound: int,
    seed: int,
    *,
    _semisimple_first_residue: bool = False,
) -> HiggsField:
    """Seeded random field Phi(t) = sum_k N_k/(t - a_k) + P(t).

    Each residue N_k is a group conjugate of a strictly-upper-triangular
    algebra draw (hence nilpotent and in the algebra); the polynomial part
    has algebra-valued coefficients of degree <= degree_bound.  Identical
    arguments reproduce the field bit for bit.

    The keyword hook replaces the first residue by a semisimple diagonal
    element; that negative control breaks both strong-parabolicity clauses.
    """
    if degree_bound < 0:
        raise ValueError("degree_bound must be >= 0")
    marked = tuple(Fraction(a) for a in marked_points)
    if len(set(marked)) != len(marked):
        raise ValueError("duplicate marked points")
    rng = random.Random(seed)
    gram = split_gram(group)
    r = group.rank_size
    m = group.m

    residues: list[Mat] = []
    for k in range(len(marked)):
        if k == 0 and _semisimple_first_residue:
            diag = [Fraction(0)] * r
            diag[0], diag[m] = Fraction(1), Fraction(-1)
            residues.append(mat_from_scalars([[diag[i] if i == j else 0 for j in range(r)] for i in range(r)]))
            continue
        u = random_nilpotent_element(group, rng)
        q = random_group_element(group, gram, rng)
        residues.append(mat_mul(mat_mul(q, u), mat_inverse(q)))
    poly_coeffs = [random_algebra_element(group, rng, -3, 3) for _ in range(degree_bound + 1)]

    entries: Mat = []
    for i in range(r):
        row = []
        for j in range(r):
            acc = RationalFunction.make(
                UniPoly.make([_constant_entry(c[i][j]) for c in poly_coeffs])
            )
            for a, n_k in zip(marked, residues):
                c = _constant_entry(n_k[i][j])
                if c != 0:
                    acc = acc + RationalFunction.make(UniPoly.const(c), UniPoly.linear_root(a))
            row.append(acc)
        entries.append(row)
    return HiggsField(group, gram, entries, marked)


def semisimple_residue_control(group: GroupSpec, marked_points, degree_bound: int, seed: int) -> HiggsField:
    """Negative control: first residue semisimple (diag(1, -1) block), so the
    residue is not nilpotent and s_2 picks up a pole of order 2."""
    if not marked_points:
        raise ValueError("control needs at least one marked point")
    return random_strongly_parabolic_higgs(
        group, marked_points, degree_bound, seed, _semisimple_first_residue=True
    )


# -- so(2m+1) reduction ---------------------------------------------------------


@dataclass(frozen=True)
class SoOddReduction:
    kernel_vector: tuple[UniPoly, ...]
    removed_index: int
    reduced: Mat
    induced_gram: GramForm


def _primitive_kernel_vector(vec: list[RationalFunction]) -> tuple[UniPoly, ...]:
    den = UniPoly.one()
    for x in vec:
        den = poly_lcm(den, x.den)
    polys = [x.num * den.exact_div(x.den) if not x.is_zero else UniPoly.zero() for x in vec]
    g = UniPoly.zero()
    for p in polys:
        g = poly_gcd(g, p)
    if g.degree > 0:
        polys = [p.exact_div(g) if not p.is_zero else p for p in polys]
    # integer-primitive, first nonzero coordinate with positive leading coeff
    den_lcm = 1
    num_gcd = 0
    for p in polys:
        for c in p.coeffs:
            den_lcm = math.lcm(den_lcm, c.denominator)
            num_gcd = math.gcd(num_gcd, c.numerator)
    scale = Fraction(den_lcm, num_gcd or 1)
    polys = [p * scale for p in polys]
    lead = next(p for p in polys if not p.is_zero)
    if lead.lc < 0:
        polys = [-p for p in polys]
    return tuple(polys)


def so_odd_reduce(fld: HiggsField) -> SoOddReduction:
    """Split off the kernel line of a generic so(2m+1) field.

    Returns the primitive polynomial kernel vector, the matrix of the action
    induced on the quotient by the standard-basis complement (dropping the
    coordinate of largest degree in the kernel vector), and the induced skew
    form G_ij = <Phi b_i, b_j>.  Guarantees x * char(reduced) = char(input).
    """
    if fld.group.kind != "so-odd":
        raise GroupError("reduction applies to so-odd fields only")
    ker = kernel_basis(fld.matrix)
    if len(ker) != 1:
        raise NonGenericFieldError("non-generic field: kernel rank != 1")
    v = _primitive_kernel_vector(ker[0])
    ell = max(range(len(v)), key=lambda i: (v[i].degree, -i))
    keep = [i for i in range(len(v)) if i != ell]
    v_ell = RationalFunction.make(v[ell])
    reduced = [
        [
            fld.matrix[i][j] - fld.matrix[ell][j] * (RationalFunction.make(v[i]) / v_ell)
            for j in keep
        ]
        for i in keep
    ]
    b = fld.gram.as_mat()
    phi_t_b = mat_mul([list(r) for r in zip(*fld.matrix)], b)
    induced = [[phi_t_b[i][j] for j in keep] for i in keep]
    try:
        gram = GramForm.make(induced, "symplectic")
    except ValueError as exc:
        raise NonGenericFieldError(f"induced form is degenerate or not skew: {exc}") from None
    return SoOddReduction(v, ell, reduced, gram)
