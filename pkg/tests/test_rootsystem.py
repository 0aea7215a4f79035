import pytest

from chowring.rootsystem import (BUILTIN_CARTAN, CartanMatrix,
                                 InfiniteRootSystemError, build_root_system,
                                 load_root_system, root_system)


@pytest.mark.parametrize("name,count", [
    ("A1", 1), ("A2", 3), ("B2", 4), ("G2", 6), ("B3", 9), ("F4", 24),
])
def test_positive_root_counts(name, count):
    assert len(root_system(name).positive_roots) == count


def test_a1_positive_roots_is_the_simple_root():
    rs = root_system("A1")
    assert rs.positive_roots == ((1,),)


def test_root_order_graded_by_height():
    rs = root_system("F4")
    heights = [rs.height(r) for r in rs.positive_roots]
    assert heights == sorted(heights)
    assert rs.highest_root == (2, 3, 4, 2)


def test_infinite_type_rejected():
    affine = CartanMatrix.from_rows([[2, -2], [-2, 2]])
    with pytest.raises(InfiniteRootSystemError):
        build_root_system(affine)


def test_bad_cartan_matrices_rejected():
    with pytest.raises(ValueError):
        CartanMatrix.from_rows([[1]])
    with pytest.raises(ValueError):
        CartanMatrix.from_rows([[2, 1], [1, 2]])
    with pytest.raises(ValueError):
        CartanMatrix.from_rows([[2, -1], [0, 2]])


def test_cartan_from_file(tmp_path):
    path = tmp_path / "b2.txt"
    path.write_text("2 -1\n-2 2\n")
    rs = load_root_system(path)
    assert len(rs.positive_roots) == 4
    assert rs.cartan.entries == BUILTIN_CARTAN["B2"]


def test_coroot_pairing_simple_roots_delta(f4):
    for i in range(1, 5):
        for j in range(1, 5):
            got = f4.coroot_pairing(f4.simple_root(i), f4.fundamental_weight(j))
            assert got == (1 if i == j else 0)


def test_coroot_pairing_highest_root(f4):
    # the pairing of the highest coroot against omega_1 is the comark 2
    assert f4.coroot_pairing(f4.highest_root, f4.fundamental_weight(1)) == 2


def test_coroot_pairing_antisymmetric_in_beta(f4):
    beta = f4.positive_roots[10]
    omega = (1, 2, 0, 3)
    minus = tuple(-x for x in beta)
    assert f4.coroot_pairing(minus, omega) == -f4.coroot_pairing(beta, omega)


def test_coroot_pairing_rejects_non_roots(f4):
    with pytest.raises(ValueError):
        f4.coroot_pairing((1, 0, 0, 1), f4.fundamental_weight(1))
    with pytest.raises(ValueError):
        f4.coroot_pairing((3, 0, 0, 0), f4.fundamental_weight(1))


def test_reflect_weight_fixes_other_fundamentals(f4):
    for i in range(1, 5):
        for j in range(1, 5):
            got = f4.reflect_weight(i, f4.fundamental_weight(j))
            if i != j:
                assert got == f4.fundamental_weight(j)
            else:
                assert got != f4.fundamental_weight(j)


def test_reflect_weight_involution(f4):
    omega = (3, -1, 2, 5)
    for i in range(1, 5):
        assert f4.reflect_weight(i, f4.reflect_weight(i, omega)) == omega


def test_reflection_convention_lock(f4):
    # s_i(alpha_i) = -alpha_i with alpha_i expanded in the weight basis
    for i in range(1, 5):
        alpha = f4.simple_root_weight(i)
        assert f4.reflect_weight(i, alpha) == tuple(-x for x in alpha)


def test_reflect_root_permutes_positive_roots(f4):
    for i in range(1, 5):
        images = {f4.reflect_root(i, beta) for beta in f4.positive_roots}
        flipped = {tuple(-x for x in r) for r in images if not f4.is_positive(r)}
        assert flipped == {f4.simple_root(i)}
        assert sum(1 for r in images if f4.is_positive(r)) == 23


def test_node_index_out_of_range(f4):
    with pytest.raises(ValueError):
        f4.reflect_weight(0, (0, 0, 0, 0))
    with pytest.raises(ValueError):
        f4.reflect_weight(5, (0, 0, 0, 0))
