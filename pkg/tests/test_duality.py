import pytest

from localduality.complexes import minimize, schreyer_resolution
from localduality.duality import (
    CohClass, CompleteIntersection, ExtClass, PreconditionError, ci_ext_generator,
    ci_level_map, coh_equal, equidimensional_hull, ext_module, find_regular_sequence,
    functoriality_check, induced_ext_map, is_certified, module_codim, module_length,
    pairing_eval, pairing_left_kernel, pairing_matrix, purity_test, right_injectivity_check,
    roos_map, sk_test, transformation_check, transport_class,
)
from localduality.groebner import Submodule, codimension, ideal
from localduality.ring import GF, Matrix, Ring

R = Ring(["x", "y"])
x, y = R.gens
T = Ring(["z", "w"])
z, w = T.gens
S = Ring(["x", "y", "z", "w"], GF(32003))
X, Y, Z, W = S.gens

J1 = Matrix(R, [[x**2, x * y]])
JZ = Matrix(T, [[z**2, z * w, w**2]])
JP = Matrix(S, [[X * Z, X * W, Y * Z, Y * W]])


def test_find_regular_sequence_examples():
    assert find_regular_sequence(ideal(R, [x**2, x * y]), 1).f == (x**2,)
    I = find_regular_sequence(ideal(S, JP.row(0)), 2)
    assert codimension(ideal(S, I.f[:1])) == 1 and codimension(I.ideal) == 2
    assert find_regular_sequence(ideal(T, JZ.row(0)), 2).f == (z**2, w**2)
    with pytest.raises(PreconditionError):
        find_regular_sequence(ideal(R, [x**2, x * y]), 2)


def test_find_regular_sequence_needs_combinations():
    A = ideal(S, [X * Y, X * Z, Y * Z])
    I = find_regular_sequence(A, 2)
    assert all(A.contains((f,)) for f in I.f)
    CompleteIntersection(I.f)


def test_seeded_search_is_deterministic():
    A = ideal(S, JP.row(0))
    assert find_regular_sequence(A, 2, 3).f == find_regular_sequence(A, 2, 3).f


def test_complete_intersection_certificate():
    with pytest.raises(PreconditionError):
        CompleteIntersection([x, x])


def test_ext_examples():
    H = ext_module(J1, 1)
    assert Submodule(R, H.relations).equals(ideal(R, [x]))
    assert ext_module(Matrix(R, [[x, y]]), 1).is_zero()
    H2 = ext_module(JZ, 2)
    assert H2.ngens == 2
    assert ext_module(J1, 5).is_zero()


def test_ci_ext_generator():
    for f in ([x], [x, y], [x**2, y**3]):
        xi = ci_ext_generator(CompleteIntersection(f))
        assert xi.xi0 == (R.one,)
        assert Submodule(R, xi.presentation.relations).equals(ideal(R, f))


def test_hull_examples():
    assert equidimensional_hull(J1, 1).equals(ideal(R, [x]))
    assert equidimensional_hull(Matrix(R, [[x, y]]), 2).equals(ideal(R, [x, y]))
    M = Matrix.from_columns(R, [(x, 0), (y, 0), (0, x)])
    assert equidimensional_hull(M, 1).equals(Submodule(R, [(1, 0), (0, x)]))
    with pytest.raises(PreconditionError):
        equidimensional_hull(J1, 2)


def test_hull_independent_of_seed():
    for seed in (0, 1, 2):
        assert equidimensional_hull(JP, 2, seed).equals(Submodule(S, JP))


def test_pairing_eval_examples():
    I = CompleteIntersection([x**2])
    H = ext_module(J1, 1)
    xi = ExtClass(H, (x, y))
    assert pairing_eval(J1, 1, xi, I).value == x
    assert pairing_eval(J1, y, xi, I).value == x * y
    assert pairing_eval(J1, x, xi, I).is_zero()
    Rx = Ring(["x"])
    t = Rx.gens[0]
    It = CompleteIntersection([t])
    assert pairing_eval(Matrix(Rx, [[t]]), 1, ci_ext_generator(It), It).value == 1


def test_pairing_eval_artinian_nonzero():
    I = CompleteIntersection([z**2, w**2])
    H = ext_module(JZ, 2)
    xi = ExtClass(H, H.generator_columns()[0])
    assert not pairing_eval(JZ, 1, xi, I).is_zero()


def test_pairing_requires_ci_in_annihilator():
    with pytest.raises(PreconditionError):
        pairing_eval(J1, 1, ExtClass(ext_module(J1, 1), (x, y)), CompleteIntersection([y]))


def test_pairing_matrix_rows():
    W = pairing_matrix(J1, CompleteIntersection([x**2]))
    assert W == Matrix(R, [[x]])
    W = pairing_matrix(Matrix(R, [[x, y]]), CompleteIntersection([x, y]))
    assert W.nrows == 1 and W[0, 0].is_constant() and W[0, 0] != 0
    I = CompleteIntersection([z**2, w**2])
    H = ext_module(JZ, 2)
    W = pairing_matrix(JZ, I, H)
    for g in (T.one, z, w):
        for j, col in enumerate(H.generator_columns()):
            lhs = pairing_eval(JZ, g, ExtClass(H, col), I).value
            assert lhs == I.reduce(W[j, 0] * g)


def test_left_kernel_examples():
    assert pairing_left_kernel(J1, CompleteIntersection([x**2])).equals(ideal(R, [x]))
    assert pairing_left_kernel(Matrix(R, [[x, y]]), CompleteIntersection([x, y])).equals(
        ideal(R, [x, y]))
    assert pairing_left_kernel(JZ, CompleteIntersection([z**2, w**2])).equals(Submodule(T, JZ))


def test_right_injectivity_examples():
    assert right_injectivity_check(Matrix(R, [[x, y]]), CompleteIntersection([x, y])).injective
    assert right_injectivity_check(J1, CompleteIntersection([x**2])).injective
    I = CompleteIntersection([X * Z, X * W + Y * Z])
    assert right_injectivity_check(JP, I).injective


def test_induced_map_identity_and_functoriality():
    phi = induced_ext_map(Matrix.identity(T, 1), JZ, JZ, 2)
    assert phi.matrix == Matrix.identity(T, 2)
    surj = Matrix(T, [[z**2, w**2]])
    out = functoriality_check(Matrix.identity(T, 1), surj, JZ, 2, (T.one,))
    assert out["commutes"]
    for g in (z, w):
        assert functoriality_check(Matrix.identity(T, 1), surj, JZ, 2, (g,))["commutes"]


def test_ci_level_map_examples():
    coarse = CompleteIntersection([x, y])
    fine = CompleteIntersection([x**2, y])
    c = ci_level_map(CohClass(coarse, R.one), fine)
    assert c.value == x and not c.is_zero()
    assert ci_level_map(CohClass(coarse, R.one), coarse).value == 1
    other = CompleteIntersection([x, x + y])
    assert ci_level_map(CohClass(coarse, R.one), other).value == 1
    with pytest.raises(PreconditionError):
        ci_level_map(CohClass(fine, R.one), coarse)


def test_coh_equal_across_levels():
    a = CohClass(CompleteIntersection([x, y]), R.one)
    b = CohClass(CompleteIntersection([x**2, y]), x)
    assert coh_equal(a, b)
    assert not coh_equal(a, CohClass(CompleteIntersection([x**2, y]), R.one))


def test_sk_examples():
    assert sk_test(JZ, 2, 2).passed
    rep = sk_test(JP, 2, 2)
    assert not rep.passed and rep.failure == 3 and rep.table[3] == 4
    Rxy = Ring(["x", "y"])
    assert sk_test(Matrix(Rxy, [[Rxy.gens[0] ** 2]]), 1, 2).passed


def test_purity_examples():
    rep = purity_test(J1, 1)
    assert not rep.pure and rep.hull_agrees
    assert purity_test(JP, 2).pure
    assert purity_test(Matrix(R, [[x, y]]), 2).pure
    with pytest.raises(PreconditionError):
        purity_test(J1, 2)


def test_roos_examples():
    r = roos_map(J1, 1)
    assert r.injective and r.surjective and r.certified_model
    r = roos_map(JP, 2)
    assert r.injective and not r.surjective and r.cokernel_length == 1
    assert r.s2_cross_check
    r = roos_map(Matrix(R, [[x, y]]), 2)
    assert r.injective and r.surjective


def test_transformation_examples():
    g = CompleteIntersection([x, y])
    for A in (Matrix(R, [[1, 0], [1, 1]]), Matrix(R, [[2, 0], [0, 3]])):
        f = CompleteIntersection(A.apply(g.f))
        out = transformation_check(g, f, A)
        assert out["chain_map"] and out["transforms"]
    g = CompleteIntersection([z**2, w])
    A = Matrix(T, [[1, 0], [1, 1]])
    out = transformation_check(g, CompleteIntersection(A.apply(g.f)), A)
    assert out["det"] == 1 and out["transforms"]
    with pytest.raises(PreconditionError):
        transformation_check(CompleteIntersection([x, y]), CompleteIntersection([x, y**2]),
                             Matrix(R, [[1, 0], [0, 1]]))


def test_well_defined_under_resolution_change():
    I = CompleteIntersection([z**2, w**2])
    E = schreyer_resolution(JZ)
    H = ext_module(JZ, 2, E)
    xi = ExtClass(H, H.generator_columns()[1])
    taylor_like = schreyer_resolution(Matrix(T, [[z**2, z * w, w**2, z**2 * w]]))
    xi2 = transport_class(xi, taylor_like)
    P2 = Matrix(T, [[z**2, z * w, w**2, z**2 * w]])
    a = pairing_eval(JZ, z, xi, I)
    b = pairing_eval(P2, z, xi2, I)
    c = pairing_eval(JZ, z, xi, I, perturb=11)
    assert a.value == b.value == c.value


def test_module_length_and_codim():
    assert module_length(Matrix(T, [[z**2, z * w, w**2]])) == 3
    assert module_length(Matrix(T, [[z]])) == float("inf")
    assert module_codim(ext_module(JZ, 1)) == float("inf")
    assert module_codim(ext_module(JZ, 2)) == 2


def test_certified_flag():
    assert is_certified(JZ)
    assert not is_certified(Matrix(R, [[x + 1, y]]))
