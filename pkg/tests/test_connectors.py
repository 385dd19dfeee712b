import itertools

import pytest

from skewlgv.connectors import (
    ComplementError,
    EnumerationCapError,
    complementary,
    complementary_inverse,
    connector_sum,
    enumerate_connectors,
    enumerate_paths,
    intersection_nodes,
    tuple_count,
    weighted_path_count,
)
from skewlgv.detring import PolyMatrix, det
from skewlgv.identity import build_h_matrix
from skewlgv.lattice import (
    Node,
    build_L,
    build_R,
    with_line_extreme_endpoints,
    with_selection,
)
from skewlgv.poly import Polynomial, VarRange, e_poly, h_poly
from skewlgv.shape import (
    IndexSelection,
    composition_shapes,
    is_row_connected,
    line_runs,
    make_skew,
    selections,
    skew_shapes,
)

FOUR_ROW_SHAPE = make_skew([1, 1, 0, 0], [4, 3, 3, 2])
FOUR_ROW_SEL = IndexSelection.make(4, [0, 1, 2], [1, 3, 4])


def path_count_matrix(lat):
    entries = [
        weighted_path_count(lat, s, t) for s in lat.sources for t in lat.sinks
    ]
    m = len(lat.sources)
    return PolyMatrix(m, m, tuple(entries), tuple(range(m)), tuple(range(m)))


# --- single-pair enumeration --------------------------------------------------


def test_same_node_gives_empty_path():
    lat = build_L(FOUR_ROW_SHAPE, FOUR_ROW_SEL)
    src = Node(0, 1)
    paths = enumerate_paths(lat, src, src)
    assert len(paths) == 1
    assert paths[0].nodes == (src,)
    assert paths[0].weight == Polynomial.one()


def test_sink_above_source_unreachable():
    lat = build_L(FOUR_ROW_SHAPE, FOUR_ROW_SEL)
    assert enumerate_paths(lat, Node(2, 0), Node(1, 4)) == []
    assert weighted_path_count(lat, Node(2, 0), Node(1, 4)) == Polynomial.zero()


def test_weighted_count_is_h_entry():
    lat = build_L(FOUR_ROW_SHAPE, FOUR_ROW_SEL)
    got = weighted_path_count(lat, Node(1, 1), Node(3, 3))
    assert got == h_poly(2, VarRange(2, 3))


def test_weighted_count_same_row_is_one():
    lat = build_L(FOUR_ROW_SHAPE, FOUR_ROW_SEL)
    assert weighted_path_count(lat, Node(1, 1), Node(1, 4)) == Polynomial.one()


def test_red_count_is_e_entry():
    red = build_R(FOUR_ROW_SHAPE, FOUR_ROW_SEL)
    got = weighted_path_count(red, Node(2, 3), Node(3, 0))
    assert got == e_poly(1, VarRange(1, 3))


def test_red_count_zero_when_degree_outruns_columns():
    # three descents required but only two diagonal columns available
    shape = make_skew([0, 0, 0], [2, 1, 1])
    sel = IndexSelection.make(3, [0, 1, 2], [1, 2, 3])
    red = build_R(shape, sel)
    assert red.sources == (Node(0, 2),)
    assert red.sinks == (Node(3, 0),)
    assert 3 > shape.beta_part(1) - shape.alpha_part(3)
    assert weighted_path_count(red, Node(0, 2), Node(3, 0)) == Polynomial.zero()
    assert e_poly(3, VarRange(1, 2)) == Polynomial.zero()


def test_paths_in_lex_order():
    shape = make_skew([0, 0], [2, 2])
    sel = IndexSelection.make(2, [0], [2])
    lat = build_L(shape, sel)
    paths = enumerate_paths(lat, Node(0, 0), Node(2, 2))
    seqs = [p.nodes for p in paths]
    assert seqs == sorted(seqs)
    assert weighted_path_count(lat, Node(0, 0), Node(2, 2)) == h_poly(
        2, VarRange(1, 2)
    )


# --- connector enumeration ----------------------------------------------------


def test_empty_selection_yields_single_empty_connector():
    sel = IndexSelection.make(4, [], [])
    lat = build_L(FOUR_ROW_SHAPE, sel)
    conns = enumerate_connectors(lat)
    assert len(conns) == 1
    assert conns[0].paths == ()
    assert conns[0].weight == Polynomial.one()
    assert connector_sum(lat) == Polynomial.one()


def test_equal_selection_forces_horizontal_connector():
    sel = IndexSelection.make(4, [0, 2, 3], [0, 2, 3])
    lat = build_L(FOUR_ROW_SHAPE, sel)
    conns = enumerate_connectors(lat, disjoint_only=True)
    assert len(conns) == 1
    only = conns[0]
    assert only.weight == Polynomial.one()
    for p in only.paths:
        assert all(u.i == v.i for u, v in p.steps())


def test_six_row_configuration_enumeration_and_lgv():
    shape = make_skew([2, 1, 1, 0, 0, 0], [6, 6, 5, 4, 4, 3])
    sel = IndexSelection.make(6, [0, 1, 3, 4], [1, 3, 5, 6])
    lat = build_L(shape, sel)
    conns = enumerate_connectors(lat, disjoint_only=True)
    assert conns
    assert connector_sum(lat) == det(path_count_matrix(lat))
    assert connector_sum(lat) == det(build_h_matrix(shape, sel))


def test_enumeration_cap():
    shape = make_skew([2, 1, 1, 0, 0, 0], [6, 6, 5, 4, 4, 3])
    sel = IndexSelection.make(6, [0, 1, 3, 4], [1, 3, 5, 6])
    lat = build_L(shape, sel)
    assert tuple_count(lat) > 10
    with pytest.raises(EnumerationCapError):
        enumerate_connectors(lat, cap=10)


def test_connector_sum_of_probe_shape_red_side():
    shape = make_skew([2, 0, 0], [3, 3, 1])
    sel = IndexSelection.make(3, [0, 1, 2], [1, 2, 3])
    red = build_R(shape, sel)
    x = Polynomial.variable
    assert connector_sum(red) == x(1) * x(2) * x(3)


# --- complementary bijection ---------------------------------------------------


def test_all_horizontal_complement():
    sel = IndexSelection.make(4, [0, 2, 3], [0, 2, 3])
    lat = build_L(FOUR_ROW_SHAPE, sel)
    red_lat = build_R(FOUR_ROW_SHAPE, sel)
    blue = enumerate_connectors(lat, disjoint_only=True)[0]
    red = complementary(blue, lat, red_lat)
    for p in red.paths:
        assert all(u.i == v.i for u, v in p.steps())
    assert red.weight == Polynomial.one()


def test_empty_connector_roundtrip():
    sel = IndexSelection.make(4, list(range(5)), list(range(5)))
    lat = build_L(FOUR_ROW_SHAPE, sel)
    red_lat = build_R(FOUR_ROW_SHAPE, sel)
    blues = enumerate_connectors(lat, disjoint_only=True)
    assert len(blues) == 1
    red = complementary(blues[0], lat, red_lat)
    assert red.paths == ()
    assert complementary_inverse(red, lat, red_lat) == blues[0]


def bijection_suite(shape, sel, lat=None, red_lat=None):
    if lat is None:
        lat = build_L(shape, sel)
    if red_lat is None:
        red_lat = build_R(shape, sel)
    blues = enumerate_connectors(lat, disjoint_only=True)
    reds = enumerate_connectors(red_lat, disjoint_only=True)
    images = [complementary(b, lat, red_lat) for b in blues]
    # weight-preserving injection onto the red side, with inverse
    assert [b.weight for b in blues] == [r.weight for r in images]

    def key(c):
        return tuple(p.nodes for p in c.paths)

    assert len({key(r) for r in images}) == len(images)
    assert sorted(key(r) for r in images) == sorted(key(r) for r in reds)
    for b, r in zip(blues, images):
        assert complementary_inverse(r, lat, red_lat) == b
        shared = intersection_nodes(b, r)
        assert shared == b.vertical_step_nodes()
        assert shared == r.diagonal_step_nodes()
        assert len(shared) == sum(sel.b_set) - sum(sel.a_set)


def test_bijection_example_exhaustive():
    bijection_suite(FOUR_ROW_SHAPE, FOUR_ROW_SEL)


def test_bijection_small_sweep():
    for n in range(1, 4):
        sels = list(selections(n))
        for shape in skew_shapes(n, 2):
            if not is_row_connected(shape):
                continue
            for sel in sels:
                bijection_suite(shape, sel)


def test_bijection_composition_batch():
    # non-partition pairs need the literal endpoint rule (extreme node of
    # each line); shapes with gaps or node-free lines stay out of scope
    count = 0
    for shape in composition_shapes(3, 2):
        if shape.is_partition_pair():
            continue
        if any(len(line_runs(shape, t)) != 1 for t in range(shape.n + 1)):
            continue
        count += 1
        base_l = build_L(shape, None)
        base_r = build_R(shape, None)
        for sel in selections(3):
            lat = with_line_extreme_endpoints(base_l, sel)
            red_lat = with_line_extreme_endpoints(base_r, sel)
            bijection_suite(shape, sel, lat, red_lat)
    assert count > 10


def test_lemma_intersections_only_at_descents():
    # rows shared between a disjoint blue connector and its complement all
    # carry a blue descent
    for shape in skew_shapes(2, 3):
        if not is_row_connected(shape):
            continue
        for sel in selections(2):
            lat = build_L(shape, sel)
            red_lat = build_R(shape, sel)
            for blue in enumerate_connectors(lat, disjoint_only=True):
                red = complementary(blue, lat, red_lat)
                down = blue.vertical_step_nodes()
                for node in intersection_nodes(blue, red):
                    assert node in down


# --- LGV agreement and nonpermutability ----------------------------------------


def test_lgv_brute_equals_path_matrix_det_small_sweep():
    # the path-count determinant matches brute force on every case, with no
    # connectivity caveat; closed forms are a separate question
    for n in range(1, 4):
        sels = list(selections(n))
        for shape in skew_shapes(n, 2):
            base_l = build_L(shape, None)
            base_r = build_R(shape, None)
            for sel in sels:
                lat = with_selection(base_l, sel)
                red = with_selection(base_r, sel)
                assert connector_sum(lat) == det(path_count_matrix(lat))
                assert connector_sum(red) == det(path_count_matrix(red))


def test_nonpermutable_no_disjoint_tuple_out_of_order():
    for n in range(1, 4):
        maxp = 3 if n < 3 else 2
        sels = [s for s in selections(n) if s.l >= 2]
        for shape in skew_shapes(n, maxp):
            base_l = build_L(shape, None)
            for sel in sels:
                lat = with_selection(base_l, sel)
                lists = [
                    enumerate_paths(lat, s, t)
                    for s, t in zip(lat.sources, lat.sinks)
                ]
                for perm in itertools.permutations(range(sel.l)):
                    if perm == tuple(range(sel.l)):
                        continue
                    permuted = [
                        enumerate_paths(lat, lat.sources[i], lat.sinks[perm[i]])
                        for i in range(sel.l)
                    ]
                    for combo in itertools.product(*permuted):
                        used = set()
                        disjoint = True
                        for p in combo:
                            if not used.isdisjoint(p.node_set):
                                disjoint = False
                                break
                            used.update(p.node_set)
                        assert not disjoint, (shape.alpha, shape.beta, sel, perm)


def test_complementary_rejects_wrong_flavor():
    sel = IndexSelection.make(4, [0], [1])
    lat = build_L(FOUR_ROW_SHAPE, sel)
    red_lat = build_R(FOUR_ROW_SHAPE, sel)
    red = enumerate_connectors(red_lat, disjoint_only=True)[0]
    with pytest.raises(ValueError):
        complementary(red, lat, red_lat)
    blue = enumerate_connectors(lat, disjoint_only=True)[0]
    with pytest.raises(ValueError):
        complementary_inverse(blue, lat, red_lat)


def test_complement_contract_violation_on_degenerate_shape():
    # a disconnected diagram strands the complementary walk short of its
    # sink; the construction reports that instead of returning junk
    shape = make_skew([3, 0], [4, 2])
    sel = IndexSelection.make(2, [0], [0])
    lat = build_L(shape, sel)
    red_lat = build_R(shape, sel)
    blues = enumerate_connectors(lat, disjoint_only=True)
    assert len(blues) == 1
    with pytest.raises(ComplementError):
        complementary(blues[0], lat, red_lat)
