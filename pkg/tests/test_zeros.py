"""Common zeros of ternary forms and local curve behaviour at a point."""
from schurlab.exact_math import QQ, vec_canonical
from schurlab.polyring import (HomPoly, line_intersection_order,
                               local_singularity, resolved_common_zeros,
                               solve_pair)


def vars3():
    return [HomPoly.variable(QQ, 3, i) for i in range(3)]


def pts(seq):
    out = []
    for p in seq:
        p = tuple(QQ.coerce(c) for c in p)
        out.append(tuple(c.serialize() for c in vec_canonical(p)))
    return sorted(out)


def test_solve_pair_four_transverse_points():
    x, y, z = vars3()
    sol = solve_pair(x * y, (x - z) * (y - z))
    assert sol.total_degree == 4
    assert not sol.unresolved_forms
    assert pts(sol.points) == pts([(0, 1, 0), (0, 1, 1), (1, 0, 0), (1, 0, 1)])


def test_solve_pair_unresolved_quadratic():
    x, y, z = vars3()
    # y = 0, x^2 = 2 z^2 has no rational solutions
    sol = solve_pair(x * x - z * z - z * z, y)
    assert not sol.points
    assert sol.unresolved_forms


def test_common_factor_detected():
    x, y, z = vars3()
    loc = resolved_common_zeros([x * (x + y), x * (y + z)])
    assert not loc.zero_dimensional
    assert loc.common_factor.proportional(x)
    assert pts(loc.points) == pts([(1, -1, 1)])


def test_three_generators_zero_dimensional():
    x, y, z = vars3()
    loc = resolved_common_zeros([x * y, y * z, x * z])
    assert loc.zero_dimensional and loc.fully_resolved
    assert pts(loc.points) == pts([(1, 0, 0), (0, 1, 0), (0, 0, 1)])


def test_local_singularity_node():
    x, y, z = vars3()
    ls = local_singularity(x * y, (0, 0, 1))
    assert ls.multiplicity == 2
    assert ls.is_node
    assert len(ls.tangent_lines) == 2
    assert not ls.unresolved_tangents


def test_local_singularity_smooth_point():
    x, y, z = vars3()
    conic = y * z - x * x
    ls = local_singularity(conic, (0, 0, 1))
    assert ls.multiplicity == 1 and not ls.is_node
    assert len(ls.tangent_lines) == 1


def test_local_singularity_irrational_tangents():
    x, y, z = vars3()
    # x^2 - 2 y^2 splits only over sqrt(2)
    curve = x * x - y * y - y * y
    ls = local_singularity(curve, (0, 0, 1))
    assert ls.multiplicity == 2
    assert ls.unresolved_tangents


def test_line_intersection_order():
    x, y, z = vars3()
    conic = y * z - x * x
    ls = local_singularity(conic, (0, 0, 1))
    # tangent line of a smooth conic meets with order exactly two
    assert line_intersection_order(conic, ls.tangent_lines[0], (0, 0, 1)) == 2
    cusp = y * y * z - x * x * x
    cls = local_singularity(cusp, (0, 0, 1))
    assert cls.multiplicity == 2 and not cls.is_node
    assert line_intersection_order(cusp, cls.tangent_lines[0], (0, 0, 1)) == 3


def test_cubic_with_node_branch_orders():
    x, y, z = vars3()
    # nodal cubic: branches meet their tangents with order three
    nodal = y * y * z - x * x * z - x * x * x
    ls = local_singularity(nodal, (0, 0, 1))
    assert ls.is_node and len(ls.tangent_lines) == 2
    orders = [line_intersection_order(nodal, t, (0, 0, 1))
              for t in ls.tangent_lines]
    assert orders == [3, 3]
