import pytest

from multischeme.modules import (
    GradedModule,
    Resolution,
    columns_to_vecs,
    determinant,
    free_resolution,
    mat_mul,
    matrix_rank,
    minors,
    vecs_to_columns,
)
from multischeme.ring import PolyRing


@pytest.fixture
def ring():
    return PolyRing(("x", "y"))


def test_determinant_two_by_two(ring):
    x, y = ring.gens()
    assert determinant([[x, y], [y, x]]) == x * x - y * y
    assert determinant([[x, y], [x, y]]).is_zero()


def test_determinant_three_by_three_triangular(ring):
    x, y = ring.gens()
    z = ring.zero()
    m = [[x, y, y], [z, y, x], [z, z, x]]
    assert determinant(m) == x * y * x


def test_minors_counts_and_values(ring):
    x, y = ring.gens()
    m = [[x, y, ring.zero()], [ring.zero(), x, y]]
    ones = minors(m, 1)
    assert len(ones) == 6
    twos = sorted(str(f) for f in minors(m, 2))
    assert twos == ["x*y", "x^2", "y^2"]
    assert minors(m, 3) == []
    with pytest.raises(ValueError):
        minors(m, 0)


def test_matrix_rank(ring):
    x, y = ring.gens()
    assert matrix_rank([[x, y], [y, x]]) == 2
    assert matrix_rank([[x, y], [x, y]]) == 1
    assert matrix_rank([[ring.zero(), ring.zero()]]) == 0


def test_column_vec_round_trip(ring):
    x, y = ring.gens()
    m = [[x, ring.zero()], [y * y, x + y]]
    vecs = columns_to_vecs(ring, m)
    assert vecs_to_columns(ring, vecs, 2) == m


def test_inhomogeneous_relation_rejected(ring):
    x, y = ring.gens()
    with pytest.raises(ValueError):
        GradedModule(ring, (0, 1), [[x], [x]])


def test_minimal_presentation_prunes_unit_pivot(ring):
    x, y = ring.gens()
    # second generator equals x * (first); the unit column kills it
    rel = [[x], [-ring.one()]]
    mod = GradedModule(ring, (0, 1), rel)
    minimal, lift = mod.minimal_with_map()
    assert minimal.gen_degrees == (0,)
    assert minimal.relations in ([], [[]])
    # original generator 1 maps to x times the survivor
    assert lift[1][0] == x
    assert lift[0][0] == ring.one()


def test_graded_module_json_round_trip(ring):
    x, y = ring.gens()
    mod = GradedModule(ring, (0, 0), [[x, y], [y, ring.zero()]])
    back = GradedModule.from_json(mod.to_json())
    assert back.gen_degrees == mod.gen_degrees
    assert back.relations == mod.relations


def test_free_resolution_of_two_variable_quotient(ring):
    x, y = ring.gens()
    mod = GradedModule(ring, (0,), [[x, y]])
    res = free_resolution(mod)
    assert res.length == 2
    assert res.betti() == {(0, 0): 1, (1, 1): 2, (2, 2): 1}
    assert res.verify()


def test_free_resolution_of_free_module_is_trivial(ring):
    mod = GradedModule(ring, (0, -1), [[], []])
    res = free_resolution(mod)
    assert res.length == 0
    assert res.betti() == {(0, 0): 1, (0, -1): 1}


def test_resolution_verify_rejects_non_complex(ring):
    x, y = ring.gens()
    bad = Resolution(ring, [[0], [1], [2]], [[[x, y]], [[x], [y]]])
    # d1 o d2 = x^2 + y^2 != 0
    assert not bad.verify()


def test_mat_mul_matches_hand_product(ring):
    x, y = ring.gens()
    a = [[x, y]]
    b = [[y], [x]]
    assert mat_mul(ring, a, b) == [[x * y + y * x]]
