"""Rank-2 bundle monads on the plane given by three n x (n-1) matrices and a
nondegenerate symmetric n x n form.

The three matrices assemble into a pencil-like grid a(z) = sum z_k A_k of
linear forms on the dual plane.  Lines z where a(z) drops below its generic
rank n-1 are the jumping lines; the curve of jumping lines of the second kind
is the determinant of the symmetric (n-1) x (n-1) grid s(z) = a(z)^T B a(z),
of degree 2n-2.  An independent route to the same curve evaluates the inverse
form on the vector of signed maximal minors of a(z).

Compatibility (each A_i^T B A_j symmetric) is exactly what makes s(z)
symmetric; it is checked literally.  Pointwise exactness of the monad cannot
be checked at every point by finitely many evaluations, so it is probed at
seeded sample vectors and at kernel vectors of the jumping points, and
reported as probed rather than passed.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import comb, factorial

from .errors import ClaimError, PreconditionError
from .exact_math import Field, Matrix, ProjSubspace, Scalar, SymForm, vec_canonical
from .polyring import (HomPoly, LinFormsMatrix, ZeroLocus, LocalSingularity,
                       line_intersection_order, local_singularity, poly_det,
                       resolved_common_zeros)


class MonadData:
    """Three n x (n-1) matrices over one field plus a nondegenerate symmetric
    form on the n-dimensional middle space."""

    __slots__ = ("field", "n", "maps", "form")

    def __init__(self, maps, form: SymForm):
        if len(maps) != 3:
            raise PreconditionError("three matrices required")
        n = maps[0].rows
        for m in maps:
            if not isinstance(m, Matrix) or m.rows != n or m.cols != n - 1:
                raise PreconditionError("matrices must all be n x (n-1)")
            if m.field != maps[0].field:
                raise PreconditionError("matrices live over different fields")
        if n < 2:
            raise PreconditionError("need n >= 2")
        if form.dim != n or form.field != maps[0].field:
            raise PreconditionError("form must be symmetric n x n over the same field")
        if not form.is_nondegenerate():
            raise PreconditionError("form must be nondegenerate")
        self.field = maps[0].field
        self.n = n
        self.maps = list(maps)
        self.form = form

    def a_V(self) -> LinFormsMatrix:
        """n x (n-1) grid of linear forms in the dual-plane coordinates."""
        return LinFormsMatrix.from_coefficient_matrices(self.maps)

    def a_M(self) -> LinFormsMatrix:
        """3 x (n-1) grid of linear forms in n middle-space covector variables."""
        mats = [Matrix(self.field, [[self.maps[k][r, c] for c in range(self.n - 1)]
                                    for k in range(3)]) for r in range(self.n)]
        return LinFormsMatrix.from_coefficient_matrices(mats)

    def a_H(self) -> LinFormsMatrix:
        """3 x n grid of linear forms in n-1 source-space variables."""
        mats = [Matrix(self.field, [[self.maps[k][r, c] for r in range(self.n)]
                                    for k in range(3)]) for c in range(self.n - 1)]
        return LinFormsMatrix.from_coefficient_matrices(mats)

    def signed_minors(self) -> list[HomPoly]:
        """The n signed maximal minors of a(z); they span the left kernel of
        a(z) wherever the rank is n-1, and their common zeros are the jumping
        points."""
        return self.a_V().signed_maximal_minors()

    def compatibility_ok(self) -> bool:
        """Each A_i^T B A_j symmetric, i < j (i = j is automatic)."""
        B = self.form.matrix
        for i, j in combinations(range(3), 2):
            P = self.maps[i].transpose() * (B * self.maps[j])
            if P != P.transpose():
                return False
        return True

    def s_grid(self) -> list[list[HomPoly]]:
        """The (n-1) x (n-1) grid of quadratic forms a(z)^T B a(z)."""
        B = self.form.matrix
        P = [[self.maps[k].transpose() * (B * self.maps[l]) for l in range(3)]
             for k in range(3)]
        m = self.n - 1
        grid = []
        for c in range(m):
            row = []
            for cp in range(m):
                coeffs = {}
                for k in range(3):
                    for l in range(k, 3):
                        exp = [0, 0, 0]
                        exp[k] += 1
                        exp[l] += 1
                        val = P[k][l][c, cp] if k == l else P[k][l][c, cp] + P[l][k][c, cp]
                        if not val.is_zero():
                            coeffs[tuple(exp)] = val
                row.append(HomPoly(self.field, 3, 2, coeffs))
            grid.append(row)
        return grid

    def jlsk_curve(self) -> HomPoly:
        """Curve of jumping lines of the second kind: det of the s-grid,
        degree 2n-2, canonical."""
        det = poly_det(self.s_grid())
        if det.is_zero():
            raise ClaimError("second-kind jumping curve degenerated to zero")
        return det.canonical()

    def jlsk_via_form(self) -> HomPoly:
        """Independent route: the inverse form evaluated on the signed minor
        vector, canonical."""
        C = self.form.inverse().matrix
        sigma = self.signed_minors()
        acc = HomPoly.zero(self.field, 3, 2 * self.n - 2)
        for r in range(self.n):
            for rp in range(self.n):
                if not C[r, rp].is_zero():
                    acc = acc + (sigma[r] * sigma[rp]).scale(C[r, rp])
        if acc.is_zero():
            raise ClaimError("form route degenerated to zero")
        return acc.canonical()

    def jumping_points(self) -> ZeroLocus:
        return resolved_common_zeros(self.signed_minors())

    def rank_at(self, z) -> int:
        z = tuple(self.field.coerce(c) for c in z)
        return self.a_V().evaluate(z).rank()

    def corank_at(self, z) -> int:
        return self.n - self.rank_at(z)

    def splitting_at(self, z) -> int:
        """Splitting order of the bundle on the line z: corank minus one
        (zero on a non-jumping line)."""
        return self.corank_at(z) - 1

    def subspaces_at(self, z):
        """(left kernel, right kernel, intersection of contracted kernels) at
        z, as projective subspaces of the middle covector space, the source
        space, and the middle covector space respectively."""
        z = tuple(self.field.coerce(c) for c in z)
        az = self.a_V().evaluate(z)
        left = ProjSubspace(self.field, self.n - 1,
                            [list(v) for v in az.left_kernel_basis()])
        right_vectors = az.kernel_basis()
        right = ProjSubspace(self.field, self.n - 2,
                             [list(v) for v in right_vectors])
        span = []
        for h in right_vectors:
            for k in range(3):
                span.append(list(self.maps[k].apply(h)))
        apair = ProjSubspace.from_equations(self.field, self.n - 1, span)
        return left, right, apair


@dataclass
class OrthogonalityReport:
    point: tuple[Scalar, ...]
    corank: int
    contained: bool
    equality: bool
    rank_drop_one: bool

    @property
    def passed(self) -> bool:
        if not self.contained:
            return False
        return self.equality if self.rank_drop_one else True


def orthogonality_report(monad: MonadData, z) -> OrthogonalityReport:
    """At a jumping point the inverse-form orthogonal complement of the
    contracted-kernel space sits inside the left kernel, with equality exactly
    at corank 2.

    The complement is computed as the form-image of the annihilator: with C
    the inverse form on the dual middle space, a covector psi is C-orthogonal
    to all of the contracted-kernel space iff C psi annihilates it, i.e. psi
    lies in the B-image of the contracted vectors themselves.
    """
    z = tuple(monad.field.coerce(c) for c in z)
    corank = monad.corank_at(z)
    if corank < 2:
        raise PreconditionError("not a jumping point")
    left, _right, apair = monad.subspaces_at(z)
    polar = apair.polar(monad.form)
    return OrthogonalityReport(vec_canonical(z), corank,
                               left.contains(polar), polar == left,
                               corank == 2)


@dataclass
class BiflexReport:
    point: tuple[Scalar, ...]
    corank: int
    splitting: int
    multiplicity: int
    is_node: bool
    tangent_orders: list[int]
    unresolved_tangents: int

    @property
    def passed(self) -> bool:
        if self.multiplicity < comb(self.corank, 2):
            return False
        if self.splitting == 1:
            if self.multiplicity != 2 or not self.is_node:
                return False
            if any(o < 4 for o in self.tangent_orders):
                return False
        return True


def biflex_reports(monad: MonadData, curve: HomPoly | None = None,
                   locus: ZeroLocus | None = None) -> list[BiflexReport]:
    """Local behaviour of the second-kind curve at every resolved jumping
    point: multiplicity at least the rank-drop bound; at splitting one, an
    honest node whose resolved branch tangents meet the curve with order at
    least four."""
    if curve is None:
        curve = monad.jlsk_curve()
    if locus is None:
        locus = monad.jumping_points()
    out = []
    for z in locus.points:
        corank = monad.corank_at(z)
        ls = local_singularity(curve, z)
        orders = [line_intersection_order(curve, line, z)
                  for line in ls.tangent_lines]
        out.append(BiflexReport(ls.point, corank, corank - 1, ls.multiplicity,
                                ls.is_node, orders, len(ls.unresolved_tangents)))
    return out


def determinantal_degree(n1: int, n2: int, r: int) -> int:
    """Degree of the generic rank <= r locus of an n1 x n2 matrix of linear
    forms, when that locus has its expected dimension."""
    assert 0 <= r <= min(n1, n2)
    num, den = 1, 1
    for i in range(n1 - r):
        num *= factorial(n2 + i) * factorial(i)
        den *= factorial(r + i) * factorial(n2 - r - i)
    assert num % den == 0
    return num // den


def multiplicity_bound(n: int, rank: int) -> int:
    """Multiplicity bound for the jumping scheme at a point of the given
    rank of the n x (n-1) grid."""
    return comb(n - rank, 2)


def compatible_form_space(field: Field, maps) -> list[Matrix]:
    """Basis of the space of symmetric matrices X with every A_i^T X A_j
    symmetric, i < j."""
    n = maps[0].rows
    pairs = tuple(combinations_with_replacement(range(n), 2))
    rows = []
    for i, j in combinations(range(3), 2):
        Ai, Aj = maps[i], maps[j]
        for c, cp in combinations(range(n - 1), 2):
            row = []
            for u, v in pairs:
                if u == v:
                    val = Ai[u, c] * Aj[u, cp] - Ai[u, cp] * Aj[u, c]
                else:
                    val = (Ai[u, c] * Aj[v, cp] + Ai[v, c] * Aj[u, cp]
                           - Ai[u, cp] * Aj[v, c] - Ai[v, cp] * Aj[u, c])
                row.append(val)
            rows.append(row)
    if not rows:
        kern = [tuple(field.one if t == s else field.zero for t in range(len(pairs)))
                for s in range(len(pairs))]
    else:
        kern = Matrix(field, rows).kernel_basis()
    out = []
    for vec in kern:
        m = [[field.zero] * n for _ in range(n)]
        for (u, v), val in zip(pairs, vec):
            m[u][v] = val
            m[v][u] = val
        out.append(Matrix(field, m))
    return out


def select_compatible_form(field: Field, maps, seed: int = 0,
                           tries: int = 200) -> SymForm:
    """Deterministically pick a nondegenerate compatible form: first sums of
    basis subsets ordered by size then position, then seeded integer
    combinations."""
    basis = compatible_form_space(field, maps)
    if not basis:
        raise ClaimError("no compatible symmetric forms at all")
    k = len(basis)
    budget = 0
    for size in range(1, k + 1):
        for subset in combinations(range(k), size):
            cand = basis[subset[0]]
            for s in subset[1:]:
                cand = cand + basis[s]
            if not cand.det().is_zero():
                return SymForm(cand).canonical()
            budget += 1
            if budget > 400:
                break
        if budget > 400:
            break
    rng = random.Random(seed)
    for _ in range(tries):
        cand = None
        for b in basis:
            t = b.scale(field.scalar(rng.randint(-5, 5)))
            cand = t if cand is None else cand + t
        if cand is not None and not cand.det().is_zero():
            return SymForm(cand).canonical()
    raise ClaimError("no nondegenerate compatible form found")


@dataclass
class MonadReport:
    generic_injectivity: str       # "pass" or "fail"
    pointwise_surjectivity: str    # "probed" or "fail"
    compatibility: str             # "pass" or "fail"
    probes: int

    @property
    def valid(self) -> bool:
        return (self.generic_injectivity == "pass"
                and self.pointwise_surjectivity == "probed"
                and self.compatibility == "pass")


def validate_monad(monad: MonadData, seed: int = 0, samples: int = 25) -> MonadReport:
    field = monad.field
    rng = random.Random(seed)
    ok3 = monad.compatibility_ok()

    aV = monad.a_V()
    ok1 = False
    for _ in range(samples):
        z = tuple(field.scalar(rng.randint(-9, 9)) for _ in range(3))
        if any(not c.is_zero() for c in z) and aV.evaluate(z).rank() == monad.n - 1:
            ok1 = True
            break
    if not ok1:
        ok1 = any(not m.is_zero() for m in monad.signed_minors())

    aH = monad.a_H()
    probes = 0
    ok2 = True
    hs = []
    for _ in range(samples):
        hs.append(tuple(field.scalar(rng.randint(-9, 9))
                        for _ in range(monad.n - 1)))
    try:
        locus = monad.jumping_points()
        for z in locus.points:
            hs.extend(aV.evaluate(z).kernel_basis())
    except (AssertionError, PreconditionError):
        pass
    for h in hs:
        if all(c.is_zero() for c in h):
            continue
        probes += 1
        if aH.evaluate(h).rank() < 2:
            ok2 = False
            break
    return MonadReport("pass" if ok1 else "fail",
                       "probed" if ok2 else "fail",
                       "pass" if ok3 else "fail",
                       probes)


def sigma_minors(monad: MonadData) -> list[HomPoly]:
    """3 x 3 minors of the middle flattening; an empty list when the grid is
    too narrow for any."""
    if monad.n - 1 < 3:
        return []
    return monad.a_M().minors(3)


def middle_rank_at(monad: MonadData, mu) -> int:
    mu = tuple(monad.field.coerce(c) for c in mu)
    return monad.a_M().evaluate(mu).rank()
