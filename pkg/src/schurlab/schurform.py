"""The invariant quadric attached to a determinantal cubic surface.

Two independent constructions of the same symmetric form, kept separate on
purpose so each validates the other:

  * kernel route: the unique (up to scale) symmetric tensor annihilated by
    the wedge-square of the defining 3 x 3 x 4 tensor; computed as the kernel
    of a 9 x 10 scalar system.
  * orthogonality route: the unique symmetric bilinear form on the target
    4-space that pairs the two line sextuples of the double six to zero,
    member against same-index member; a 24 x 10 scalar system.

The kernel form B and the orthogonality form C are mutually inverse up to
scale, and the polarity of either swaps the two sextuples of the double six.
"""
from __future__ import annotations

from itertools import combinations, combinations_with_replacement

from .detrep import DetRep
from .errors import ClaimError
from .exact_math import Matrix, SymForm

SYM_PAIRS = tuple(combinations_with_replacement(range(4), 2))


def _unpack_sym(field, vec) -> SymForm:
    rows = [[field.zero] * 4 for _ in range(4)]
    for (b, bp), val in zip(SYM_PAIRS, vec):
        rows[b][bp] = val
        rows[bp][b] = val
    return SymForm.from_rows(field, rows)


def schur_kernel_form(rep: DetRep) -> SymForm:
    """Kernel route.  Unknowns are the ten entries of a symmetric 4 x 4
    tensor; each of the nine equations pairs a 2 x 2 pattern of relation and
    plane indices against the symmetrized wedge of the tensor slices."""
    field = rep.field
    g = rep.tensor
    rows = []
    for i, ip in combinations(range(3), 2):
        for a, ap in combinations(range(3), 2):
            def wedge(b, bp):
                return (g[i][a][b] * g[ip][ap][bp] - g[ip][a][b] * g[i][ap][bp]
                        - g[i][ap][b] * g[ip][a][bp] + g[ip][ap][b] * g[i][a][bp])
            row = []
            for b, bp in SYM_PAIRS:
                row.append(wedge(b, b) if b == bp else wedge(b, bp) + wedge(bp, b))
            rows.append(row)
    kern = Matrix(field, rows).kernel_basis()
    if len(kern) != 1:
        raise ClaimError(f"kernel route: expected a unique form, kernel dim {len(kern)}")
    form = _unpack_sym(field, kern[0])
    if not form.is_nondegenerate():
        raise ClaimError("kernel route produced a degenerate form")
    return form.canonical()


def orthogonal_form_for_pairs(field, pairs) -> SymForm:
    """The unique symmetric form on a 4-space pairing each listed pair of
    lines to zero.  Each pair contributes one row per basis-vector product;
    the kernel of the stacked system must be exactly one-dimensional."""
    rows = []
    for left, right in pairs:
        for u in left.basis:
            for v in right.basis:
                row = []
                for b, bp in SYM_PAIRS:
                    if b == bp:
                        row.append(u[b] * v[b])
                    else:
                        row.append(u[b] * v[bp] + u[bp] * v[b])
                rows.append(row)
    kern = Matrix(field, rows).kernel_basis()
    if len(kern) != 1:
        raise ClaimError(f"orthogonality route: kernel dim {len(kern)}, expected 1")
    form = _unpack_sym(field, kern[0])
    if not form.is_nondegenerate():
        raise ClaimError("orthogonality route produced a degenerate form")
    return form.canonical()


def schur_orthogonal_form(rep: DetRep) -> SymForm:
    """Orthogonality route.  C(u, v) = 0 for every u in the cone over the
    k-th line of one sextuple and v in the cone over the k-th line of the
    other, k = 0..5."""
    pairs = [(rep.a_line(k), rep.b_line(k)) for k in range(6)]
    return orthogonal_form_for_pairs(rep.field, pairs)


def schur_pair(rep: DetRep) -> tuple[SymForm, SymForm]:
    """Both routes, with the mutual-inverse claim enforced.  Returns (B, C)
    with B from the kernel route and C from the orthogonality route."""
    B = schur_kernel_form(rep)
    C = schur_orthogonal_form(rep)
    if not B.inverse().proportional(C):
        raise ClaimError("quadric routes disagree: kernel form is not inverse "
                         "to the orthogonality form")
    return B, C


def minor_apolarity(rep: DetRep, form: SymForm) -> bool:
    """Independent surrogate for the kernel route: the form is trace-paired
    to zero with the Gram matrix of each 2 x 2 minor of the 3 x 3 grid."""
    field = rep.field
    half = field.scalar(1) / field.scalar(2)
    for q in rep.target_grid.minors(2):
        total = field.zero
        for b in range(4):
            for bp in range(4):
                exp = [0, 0, 0, 0]
                exp[b] += 1
                exp[bp] += 1
                gram = q.coeff(tuple(exp))
                if b != bp:
                    gram = gram * half
                total = total + gram * form.matrix[b, bp]
        if not total.is_zero():
            return False
    return True


def polarity_swaps_sextuples(rep: DetRep, B: SymForm) -> bool:
    """Polarity in the kernel-route form exchanges same-index lines of the
    two sextuples."""
    for k in range(6):
        a, b = rep.a_line(k), rep.b_line(k)
        if a.polar(B) != b or b.polar(B) != a:
            return False
    return True


def induced_monad(rep: DetRep):
    """Monad over the plane whose middle space is the target 4-space: the
    three coordinate slices of the defining tensor paired with the kernel
    form.  Its jumping points recover the original hexad."""
    from .hulek_monad import MonadData
    field = rep.field
    maps = [Matrix.from_rows(field,
                             [[rep.tensor[i][a][b] for i in range(3)]
                              for b in range(4)])
            for a in range(3)]
    return MonadData(maps, schur_kernel_form(rep))
