import random
from fractions import Fraction as QQ

import numpy as np
import pytest

from semifock import errors
from semifock.domains import GaussRational, gauss, one, zelem
from semifock.fock import (
    FockWindow,
    build_fock,
    build_quotient_fock,
    default_window,
    matrix_coordinate_dump,
    module_window,
    product_consistency,
    quotient_covariance_test,
    represent_semicrossed,
    semigroup_window,
    verify_proposition,
)
from semifock.groupalg import monomial, unit
from semifock.modules import SubmoduleDesc, gaussian_line, is_submodule, zmodule
from semifock.semicross import SemicrossedElem, sc_monomial, sc_multiply, sc_one

Z = zmodule(1)
Z6 = zmodule(0, 6)


def gr(re, im=0):
    return GaussRational(QQ(re), QQ(im))


def u(pres, *coords):
    return monomial(pres, pres.element(*coords))


def test_window_sizes():
    # counting: integers in [-8, 8] times nonzero |r| <= 6
    rep = build_fock(Z, default_window(Z, 8, 6))
    assert rep.n_mod == 17 and rep.n_semi == 12
    assert rep.size == 204
    z4 = zmodule(0, 4)
    rep4 = build_fock(z4, default_window(z4, None, 3))
    assert rep4.size == 4 * 6 == 24


def test_window_validation():
    with pytest.raises(errors.InvalidInput):
        semigroup_window("Z", 0)
    # asymmetric module window
    with pytest.raises(errors.InvalidInput):
        FockWindow(
            tuple([Z.element(0), Z.element(1)]),
            semigroup_window("Z", 2),
        )
    # missing the unit index
    win = default_window(Z, 2, 2)
    no_one = tuple(r for r in win.semigroup_window if abs(r.re) != 1)
    with pytest.raises(errors.WindowTooSmall):
        build_fock(Z, FockWindow(win.module_window, no_one))


def test_gaussian_semigroup_window_unit_closed():
    win = semigroup_window("Zi", 2)
    assert len(win) == 8
    assert gauss(1, 1) in win and gauss(-1, 1) in win


def test_op_examples():
    rep = build_fock(Z, default_window(Z, 8, 6))
    i13 = rep.basis_index(Z.element(1), zelem(3))
    # U(2): (1, 3) -> (2*3 + 1, 3) = (7, 3)
    perm_u = rep.op_perm("U", Z.element(2))
    assert perm_u[i13] == rep.basis_index(Z.element(7), zelem(3))
    # S(2): (1, 3) -> (1, 6)
    perm_s = rep.op_perm("S", zelem(2))
    assert perm_s[i13] == rep.basis_index(Z.element(1), zelem(6))
    # Sstar(2) kills (1, 3): 3 is not 2 times anything
    perm_t = rep.op_perm("Sstar", zelem(2))
    assert perm_t[i13] == -1
    # and recovers (1, 3) from (1, 6)
    i16 = rep.basis_index(Z.element(1), zelem(6))
    assert perm_t[i16] == i13


def test_op_matrix_partial_permutation_structure():
    rep = build_fock(Z, default_window(Z, 6, 4))
    for key in [("U", Z.element(2)), ("S", zelem(2)), ("Sstar", zelem(2)), ("U", Z.element(-1))]:
        mat = rep.op_matrix(*key)
        dense_abs = np.abs(mat.toarray())
        assert set(np.unique(dense_abs)) <= {0.0, 1.0}
        assert np.all(dense_abs.sum(axis=0) <= 1)
        assert np.all(dense_abs.sum(axis=1) <= 1)


def test_out_of_window_rejected():
    rep = build_fock(Z, default_window(Z, 4, 3))
    with pytest.raises(errors.OutOfWindow):
        rep.op_matrix("U", Z.element(5))
    with pytest.raises(errors.OutOfWindow):
        rep.op_matrix("S", zelem(4))


def test_verify_proposition_on_z():
    rep = build_fock(Z, default_window(Z, 64, 12))
    report = verify_proposition(rep)
    assert report["pass"]
    for ident in report["identities"]:
        assert ident["max_residual"] <= 1e-12
        assert ident["interior_count"] >= 50


def test_verify_proposition_torsion_order_two():
    rep = build_fock(Z6, default_window(Z6, None, 6))
    report = verify_proposition(rep)
    assert report["pass"]
    # U(3)U(3) = U(0) on the order-2 element: exercised inside group_rep
    m3 = Z6.element(3)
    perm = rep.word_perm([("U", m3), ("U", m3)])
    ident = np.arange(rep.size)
    assert np.all(perm == ident)


def test_verify_proposition_gaussian_module():
    gi = gaussian_line()
    rep = build_fock(gi, default_window(gi, 12, 2))
    report = verify_proposition(
        rep,
        m_sample=[gi.element(a, b) for a in (-1, 0, 1) for b in (-1, 0, 1)],
    )
    assert report["pass"]


def test_unit_element_is_identity():
    rep = build_fock(Z, default_window(Z, 4, 3))
    s1 = rep.op_matrix("S", one("Z"))
    u0 = rep.op_matrix("U", Z.element(0))
    eye = rep.identity_matrix()
    assert (s1 - eye).nnz == 0
    assert (u0 - eye).nnz == 0


def test_empty_interior_raises():
    # with only r = +-1 in the window, S(2) never lands inside
    win = FockWindow(module_window(Z, 4), semigroup_window("Z", 1))
    rep = build_fock(Z, win)
    with pytest.raises((errors.EmptyInterior, errors.OutOfWindow)):
        verify_proposition(rep, r_sample=[zelem(2)])


def test_compression_identity_numerically():
    # Sstar(r) U^m S(r) agrees with U^{rm} on interior vectors
    rep = build_fock(Z, default_window(Z, 32, 6))
    for r_raw, m_raw in [(3, 1), (2, -2), (5, 1)]:
        r = zelem(r_raw)
        m = Z.element(m_raw)
        lhs = [("Sstar", r), ("U", m), ("S", r)]
        rhs = [("U", Z.element(r_raw * m_raw))]
        p1 = rep.word_perm(lhs)
        p2 = rep.word_perm(rhs)
        interior = (p1 >= 0) & (p2 >= 0)
        assert interior.sum() > 20
        assert np.all(p1[interior] == p2[interior])


def test_represent_semicrossed_examples():
    rep = build_fock(Z, default_window(Z, 16, 6))
    eye = rep.identity_matrix()
    assert (represent_semicrossed(rep, sc_one(Z)) - eye).nnz == 0
    x = sc_monomial(zelem(2), u(Z, 1)) - sc_monomial(zelem(2), u(Z, 1))
    assert represent_semicrossed(rep, x).nnz == 0


def test_represent_worked_product():
    rep = build_fock(Z, default_window(Z, 32, 8))
    x = sc_monomial(zelem(2), u(Z, 1))
    y = sc_monomial(zelem(3), u(Z, 1))
    ok, residual, interior = product_consistency(rep, x, y)
    assert ok and residual <= 1e-12 and interior > 0
    # the symbolic product is S_6 U^4; check the matrices agree there too
    z = sc_multiply(x, y)
    assert list(z.terms) == [zelem(6)]


def rand_sc(pres, rng):
    terms = []
    for _ in range(rng.randint(1, 2)):
        r = zelem(rng.choice([1, -1, 2, 3]))
        c = GaussRational(QQ(rng.randint(-3, 3), rng.randint(1, 2)),
                          QQ(rng.randint(-2, 2), 1))
        coords = [rng.randint(-3, 3) for _ in range(pres.rank)]
        terms.append((r, monomial(pres, pres.element(coords), c)))
    return SemicrossedElem(pres, terms)


def test_represent_multiplicative_random():
    rep = build_fock(Z6, default_window(Z6, None, 12))
    rng = random.Random(0)
    for _ in range(100):
        x = rand_sc(Z6, rng)
        y = rand_sc(Z6, rng)
        ok, residual, interior = product_consistency(rep, x, y)
        assert interior > 0
        assert ok, f"residual {residual}"


def test_represent_linear():
    rep = build_fock(Z6, default_window(Z6, None, 6))
    rng = random.Random(1)
    for _ in range(20):
        x = rand_sc(Z6, rng)
        y = rand_sc(Z6, rng)
        mx = represent_semicrossed(rep, x)
        my = represent_semicrossed(rep, y)
        mxy = represent_semicrossed(rep, x + y)
        assert abs((mx + my - mxy)).max() <= 1e-12


def test_build_quotient_fock_cosets():
    six = SubmoduleDesc.span(Z, [(6,)])
    rep = build_quotient_fock(Z, six, semigroup_window("Z", 3))
    assert rep.n_mod == 6
    assert rep.n_semi == 6
    # U(1) on (coset 5, r = 2): 1*2 + 5 = 7 = 1 mod 6
    target = rep.projection(Z.element(1 * 2 + 5))
    src = rep.basis_index(rep.projection(Z.element(5)), zelem(2))
    dst = rep.basis_index(target, zelem(2))
    assert rep.op_perm("U", Z.element(1))[src] == dst


def test_build_quotient_fock_infinite_needs_box():
    gi = gaussian_line()
    reals = SubmoduleDesc.span(gi, [(1, 0)])
    with pytest.raises(errors.InfiniteQuotient):
        build_quotient_fock(gi, reals, semigroup_window("Zi", 2), coset_box=None)
    rep = build_quotient_fock(gi, reals, semigroup_window("Zi", 2), coset_box=5)
    assert rep.n_mod == 11  # cosets indexed by the imaginary coordinate


def test_quotient_covariance_gaussian_counterexample():
    gi = gaussian_line()
    reals = SubmoduleDesc.span(gi, [(1, 0)])
    observed, report = quotient_covariance_test(
        gi, reals, [gauss(0, 1)], coset_box=6
    )
    assert not observed
    assert not report["predicted_is_submodule"]
    assert report["agree"]


def test_quotient_covariance_true_submodule():
    gi = gaussian_line()
    two = SubmoduleDesc.span(gi, [(2, 0), (0, 2)])
    observed, report = quotient_covariance_test(
        gi, two, [gauss(1, 0), gauss(0, 1), gauss(1, 1)], coset_box=6
    )
    assert observed
    assert report["predicted_is_submodule"]
    assert report["agree"]


def test_quotient_covariance_z_always_true():
    five = SubmoduleDesc.span(Z, [(5,)])
    observed, report = quotient_covariance_test(
        Z, five, [zelem(2), zelem(3), zelem(-1)], coset_box=None
    )
    assert observed and report["agree"]


def test_quotient_covariance_exhaustive_cyclic_family():
    gi = gaussian_line()
    r_sample = [gauss(1, 0), gauss(0, 1), gauss(1, 1)]
    for a in range(-2, 3):
        for b in range(-2, 3):
            sub = SubmoduleDesc.span(gi, [(a, b)])
            observed, report = quotient_covariance_test(
                gi, sub, r_sample, coset_box=8
            )
            assert observed == is_submodule(sub), (a, b)
            assert report["agree"]


def test_matrix_coordinate_dump():
    rep = build_fock(Z, default_window(Z, 1, 1))
    text = matrix_coordinate_dump(rep.op_matrix("S", zelem(-1)))
    lines = text.splitlines()
    assert lines
    for line in lines:
        r, c, re, im = line.split()
        assert float(re) == 1.0 and float(im) == 0.0


def test_matrices_reproducible_byte_for_byte():
    dumps = []
    for _ in range(2):
        rep = build_fock(Z6, default_window(Z6, None, 4))
        text = "\n".join(
            matrix_coordinate_dump(rep.op_matrix(kind, param))
            for kind, param in [
                ("U", Z6.element(2)),
                ("S", zelem(3)),
                ("Sstar", zelem(2)),
            ]
        )
        dumps.append(text.encode())
    assert dumps[0] == dumps[1]


def test_represent_gaussian_indices():
    gi = gaussian_line()
    rep = build_fock(gi, default_window(gi, 10, 4))
    rng = random.Random(2)
    one_plus_i = gauss(1, 1)
    x = sc_monomial(one_plus_i, monomial(gi, gi.element(1, 0)))
    ok, residual, interior = product_consistency(rep, x, x)
    assert ok and interior > 0
    # the product index is 2i, inside the norm-4 window
    z = sc_multiply(x, x)
    assert list(z.terms) == [gauss(0, 2)]
