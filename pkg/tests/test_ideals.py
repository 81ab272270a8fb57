"""Groebner bases, membership cofactors, and nilpotency certificates."""

import random

import pytest

from jacarena.algebra import GF, QQ, ZZ, MonomialOrder, Polynomial
from jacarena.errors import InvalidCertificate
from jacarena.ideals import (
    NilCertificate,
    groebner,
    ideal_member,
    radical_combine,
)
from jacarena.parsing import parse_polynomial, parse_ring
from jacarena.rings import nil_exponent_search, nil_member


def gb_of(texts, ring, vars):
    gens = [parse_polynomial(t, ring, vars) for t in texts]
    return groebner(gens, MonomialOrder("DEGREVLEX", vars), ring=ring)


def test_groebner_univariate_collapse():
    gb = gb_of(["X^2-1", "X-1"], QQ, ("X",))
    assert [b.to_text() for b in gb.basis] == ["X - 1"]


def test_groebner_strong_basis_stays():
    gb = gb_of(["2", "X"], ZZ, ("X",))
    assert sorted(b.to_text() for b in gb.basis) == ["2", "X"]


def test_groebner_unit_ideal():
    gb = gb_of(["X", "X-1"], QQ, ("X",))
    assert [b.to_text() for b in gb.basis] == ["1"]
    assert gb.contains_one


def test_groebner_empty_input():
    gb = groebner([], MonomialOrder("DEGREVLEX", ("X",)), ring=QQ)
    assert gb.basis == ()
    assert not gb.contains_one


def test_groebner_gcd_completion_pair():
    # <2X, 3Y> needs the gcd-completion element XY to be strong.
    gb = gb_of(["2*X", "3*Y"], ZZ, ("X", "Y"))
    texts = sorted(b.to_text() for b in gb.basis)
    assert "X*Y" in texts
    member = ideal_member(
        parse_polynomial("5*X*Y", ZZ, ("X", "Y")), list(gb.gens)
    )
    assert member is not None


def _check_transformation(gb):
    for row, cofs in zip(gb.basis, gb.cofactors):
        acc = Polynomial.zero(gb.ring, gb.order.vars)
        for c, g in zip(cofs, gb.gens):
            acc = acc + c * g
        assert acc == row


def _check_s_and_g_polys_reduce(gb):
    rows = list(zip(gb.basis, (gb.order.leading(b.terms) for b in gb.basis)))
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            (pi, (lmi, lci)), (pj, (lmj, lcj)) = rows[i], rows[j]
            lcm = lmi.lcm(lmj)
            si, sj = lcm.div(lmi), lcm.div(lmj)
            if gb.ring.kind == "ZZ":
                import math

                l = lci * lcj // math.gcd(lci, lcj)
                s = pi.mul_term(si, l // lci) - pj.mul_term(sj, l // lcj)
                assert gb.normal_form(s).is_zero()
                g, u, v = _egcd(lci, lcj)
                gp = pi.mul_term(si, u) + pj.mul_term(sj, v)
                assert gb.normal_form(gp).is_zero()
            else:
                s = pi.mul_term(si, gb.ring.invert(lci)) - pj.mul_term(
                    sj, gb.ring.invert(lcj)
                )
                assert gb.normal_form(s).is_zero()


def _egcd(a, b):
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    g, s, t = _egcd(b, a % b)
    return (g, t, s - (a // b) * t)


@pytest.mark.parametrize(
    "ring,texts,vars",
    [
        (QQ, ["X^2*Y - 1", "X*Y^2 - X"], ("X", "Y")),
        (GF(5), ["X^2 + Y", "Y^2 + X", "X*Y - 2"], ("X", "Y")),
        (ZZ, ["2*X + Y", "3*Y^2", "6"], ("X", "Y")),
        (ZZ, ["4*X^2 - Y", "6*X*Y", "10"], ("X", "Y")),
    ],
)
def test_groebner_invariants(ring, texts, vars):
    gb = gb_of(texts, ring, vars)
    _check_transformation(gb)
    _check_s_and_g_polys_reduce(gb)


def test_groebner_random_transformation_invariant():
    rng = random.Random(20240)
    for ring in (QQ, ZZ, GF(5)):
        for _ in range(6):
            vars = ("X", "Y")
            gens = []
            for _ in range(rng.randint(1, 3)):
                terms = {
                    (rng.randint(0, 2), rng.randint(0, 2)): rng.randint(-4, 4)
                    for _ in range(rng.randint(1, 3))
                }
                gens.append(Polynomial(ring, vars, terms))
            gb = groebner(gens, MonomialOrder("DEGREVLEX", vars), ring=ring)
            _check_transformation(gb)
            _check_s_and_g_polys_reduce(gb)


def test_ideal_member_bezout():
    one = Polynomial.constant(ZZ, 1)
    cofs = ideal_member(one, [Polynomial.constant(ZZ, 3), Polynomial.constant(ZZ, 5)])
    assert cofs is not None
    assert cofs[0] * 3 + cofs[1] * 5 == one


def test_ideal_member_degree_obstruction():
    x = parse_polynomial("X", QQ, ("X",))
    assert ideal_member(x, [parse_polynomial("X^2", QQ, ("X",))]) is None


def test_ideal_member_mixed():
    target = parse_polynomial("6+X", ZZ, ("X",))
    gens = [parse_polynomial("2", ZZ, ("X",)), parse_polynomial("X", ZZ, ("X",))]
    cofs = ideal_member(target, gens)
    assert cofs is not None
    assert cofs[0] * gens[0] + cofs[1] * gens[1] == target


def test_nil_member_integer_example():
    Z = parse_ring("ZZ")
    cert = nil_member(Z.element(6), [Z.element(12)])
    assert cert is not None and cert.exponent == 2
    assert cert.verify()


def test_nil_member_absent():
    R = parse_ring("QQ[X]")
    assert nil_member(R.element("X"), [R.element("X^2+X^3")]) is None
    found = nil_exponent_search(R.element("X"), [R.element("X^2+X^3")], cap=10)
    assert found is None


def test_nil_member_zero_element():
    Z = parse_ring("ZZ")
    cert = nil_member(Z.element(0), [])
    assert cert.exponent == 1 and cert.cofactors == () and cert.verify()


def test_nil_member_agrees_with_exponent_search():
    rng = random.Random(77)
    rings = [parse_ring("QQ[X,Y]"), parse_ring("GF(5)[X,Y]"), parse_ring("ZZ[X]")]
    for ring in rings:
        for _ in range(8):
            def rand_elt():
                terms = {
                    tuple(rng.randint(0, 2) for _ in ring.vars): rng.randint(-3, 3)
                    for _ in range(rng.randint(1, 3))
                }
                return ring.element(Polynomial(ring.base, ring.vars, terms))

            x = rand_elt()
            constraints = [rand_elt() for _ in range(rng.randint(1, 2))]
            cert = nil_member(x, constraints)
            search = nil_exponent_search(x, constraints, cap=12)
            if search is not None:
                e, cert2 = search
                assert cert is not None, (x, constraints)
                assert cert2.verify()
            if cert is not None:
                assert cert.verify()
                if cert.exponent <= 12:
                    assert search is not None


def test_certificate_rejects_tampering():
    Z = parse_ring("ZZ")
    cert = nil_member(Z.element(6), [Z.element(12)])
    bad = NilCertificate(cert.element, cert.exponent + 1, cert.generators, cert.cofactors)
    assert not bad.verify()
    with pytest.raises(InvalidCertificate):
        bad.require_valid()


def test_radical_combine_integers():
    Z = parse_ring("ZZ")
    x, y = Z.element(6), Z.element(2)
    cert_xy = nil_member(Z.element(12), [Z.element(24)])
    cert_x = nil_member(x, [Z.element(24), y])
    assert cert_xy is not None and cert_x is not None
    out = radical_combine(cert_xy, cert_x)
    assert out.element == x.poly
    assert out.exponent == cert_x.exponent * cert_xy.exponent + cert_xy.exponent
    assert out.verify()


def test_radical_combine_polynomials():
    R = parse_ring("QQ[X]")
    x = R.element("X")
    y = R.element("X")
    cert_xy = nil_member(R.element("X^2"), [R.element("X^4")])
    cert_x = nil_member(x, [R.element("X^4"), y])
    out = radical_combine(cert_xy, cert_x)
    assert out.verify()
    assert out.exponent == cert_x.exponent * cert_xy.exponent + cert_xy.exponent


def test_radical_combine_degenerate_unit_y():
    # handmade outer certificate with positive exponent and 1 in U
    Z = parse_ring("ZZ")
    one = Polynomial.constant(ZZ, 1)
    x = Polynomial.constant(ZZ, 5)
    cert_xy = NilCertificate(x, 1, (one,), (x,)).require_valid()
    cert_x = NilCertificate(x, 3, (one, one), (Polynomial.constant(ZZ, 100), Polynomial.constant(ZZ, 25))).require_valid()
    out = radical_combine(cert_xy, cert_x)
    assert out.exponent == cert_x.exponent
    assert out.verify()


def test_radical_combine_rejects_invalid_inputs():
    one = Polynomial.constant(ZZ, 1)
    x = Polynomial.constant(ZZ, 5)
    bad = NilCertificate(x, 2, (one,), (x,))
    good = NilCertificate(x, 1, (one, one), (Polynomial.zero(ZZ), x))
    with pytest.raises(InvalidCertificate):
        radical_combine(bad, good)


def test_lex_order_available_for_elimination():
    gb = groebner(
        [parse_polynomial("X - Y^2", QQ, ("X", "Y"))],
        MonomialOrder("LEX", ("X", "Y")),
        ring=QQ,
    )
    assert len(gb.basis) == 1
