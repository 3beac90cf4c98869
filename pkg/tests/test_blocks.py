import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from hadamard_forge.blocks import (
    Base,
    BlockAtom,
    NCase,
    enumerate_variants,
    gram_claim,
    gram_claim_coefficients,
    gram_residual,
    kron_form,
    m_case_a,
    m_case_b,
    m_variants,
    n_eq4,
    n_printed,
    realize_block,
    spec,
    variant_count,
)
from hadamard_forge.errors import SymmetryMismatchError
from hadamard_forge.matrix import SignMatrix, all_ones, identity, kron
from hadamard_forge.seeds import conference_of_order

from conftest import grid_oracle, residue_conference


def test_atom_parse_and_text():
    assert str(BlockAtom.parse("-Qt")) == "-Qt"
    assert BlockAtom.parse("P") == BlockAtom(Base.P, 1)
    assert spec("[[+P, +Q],[-Q, +P]]").text == "[[+P,+Q],[-Q,+P]]"
    with pytest.raises(ValueError):
        spec("[[+P,+X],[-Q,+P]]")


def test_all_j_grid():
    c = conference_of_order(5)
    assert realize_block(spec("[[+J,+J],[+J,+J]]"), c) == all_ones(10)


@pytest.mark.parametrize("q", [3, 5, 7, 11, 13])
@pytest.mark.parametrize("text", ["[[+P,+J],[-J,+P]]", "[[+P,+Q],[-Q,+P]]", "[[-Qt,+Q],[+Qt,-J]]"])
def test_realize_matches_oracle(q, text):
    bs = spec(text)
    cells = [str(a) for a in bs.grid]
    assert np.array_equal(realize_block(bs, conference_of_order(q)).entries, grid_oracle(residue_conference(q), cells))


def test_printed_and_eq4_grids():
    assert n_printed(NCase.I).text == "[[+P,+J],[-J,+P]]"
    assert n_printed(NCase.II).text == "[[+J,+Q],[-Q,+J]]"
    assert n_printed(NCase.III).text == "[[+P,+Q],[-Q,+P]]"
    assert n_printed(NCase.IV).text == "[[+P,+P],[+P,-P]]"
    assert n_eq4(NCase.I).text == "[[+J,+P],[-P,+J]]"
    assert n_eq4(NCase.II).text == "[[+Q,+J],[-J,+Q]]"
    assert n_eq4(NCase.III).text == "[[+Q,+P],[-P,+Q]]"
    with pytest.raises(ValueError):
        n_eq4(NCase.IV)
    for case in (NCase.I, NCase.II, NCase.III):
        assert n_printed(case).swapped().grid == n_eq4(case).grid


def test_gram_coefficients():
    assert gram_claim_coefficients(NCase.I, 5) == (6, 4)
    assert gram_claim_coefficients(NCase.II, 7) == (6, 8)
    assert gram_claim_coefficients(NCase.III, 11) == (6, 16)
    assert gram_claim_coefficients(NCase.IV, 7) == (6, 8)
    g = gram_claim(NCase.I, 5)
    assert g.shape == (10, 10)
    assert g.entries[0, 0] == 10 and g.entries[0, 1] == 6 and g.entries[0, 5] == 0


def test_m_case_a():
    for q in (3, 7, 11, 19):
        c = conference_of_order(q)
        m = m_case_a(c)
        assert m.is_sign()
        inner = 2 * (q + 1) * identity(q) - 2 * all_ones(q)
        assert m @ m.T == kron(identity(2), inner)
    with pytest.raises(SymmetryMismatchError):
        m_case_a(conference_of_order(5))


def test_m_case_b():
    for q in (5, 9, 13):
        c = conference_of_order(q)
        m = m_case_b(c)
        assert m.is_sign()
        assert m == m.T
        inner = 2 * (q + 1) * identity(q) - 2 * all_ones(q)
        assert m @ m.T == kron(identity(2), inner)
    with pytest.raises(SymmetryMismatchError):
        m_case_b(conference_of_order(7))


def test_m_variants():
    vs = m_variants()
    assert len(vs) == 16
    assert vs[0].text == "[[+Q,+Q],[+Q,-Q]]"
    assert vs[1].text == "[[+Q,+Q],[+Q,-Qt]]"
    assert vs[8].text == "[[+Qt,+Q],[+Q,-Q]]"


@pytest.mark.parametrize("case,qs", [(NCase.I, [3, 5, 7, 9, 13]), (NCase.II, [3, 7, 11, 19])])
def test_cases_i_ii_meet_gram_claim(case, qs):
    for q in qs:
        c = conference_of_order(q)
        for bs in (n_printed(case), n_eq4(case)):
            n = realize_block(bs, c)
            assert gram_residual(n, case, q) == SignMatrix(np.zeros((2 * q, 2 * q)))


def test_case_iii_residual_is_off_diagonal():
    # the printed case-III grid misses its claimed Gram form; the gap sits in
    # the off-diagonal blocks and equals -4C / +4C there
    q = 11
    c = conference_of_order(q)
    r = gram_residual(realize_block(n_printed(NCase.III), c), NCase.III, q).entries
    cm = c.matrix.entries
    assert not r[:q, :q].any() and not r[q:, q:].any()
    assert np.array_equal(r[:q, q:], -4 * cm)
    assert np.array_equal(r[q:, :q], 4 * cm)


def test_case_iv_meets_gram_claim():
    for q in (3, 7, 11):
        n = realize_block(n_printed(NCase.IV), conference_of_order(q))
        assert not gram_residual(n, NCase.IV, q).entries.any()


square = st.integers(1, 6)


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_kron_form_gram_identity(data):
    q = data.draw(square)
    a = SignMatrix(data.draw(arrays(np.int64, (q, q), elements=st.integers(-3, 3))))
    b = SignMatrix(data.draw(arrays(np.int64, (q, q), elements=st.integers(-3, 3))))
    n = kron_form(a, b)
    assert n == SignMatrix(np.block([[b.entries, a.entries], [-a.entries, b.entries]]))
    k2 = SignMatrix([[0, 1], [-1, 0]])
    expected = (kron(identity(2), a @ a.T + b @ b.T)
                + kron(k2, a @ b.T) + kron(k2.T, b @ a.T))
    assert n @ n.T == expected


def test_variant_counts_and_order():
    assert variant_count(n_printed(NCase.I)) == 32
    assert variant_count(n_printed(NCase.III)) == 128
    vs = enumerate_variants(n_printed(NCase.III))
    assert len(vs) == 128
    assert vs[0].grid == n_printed(NCase.III).grid
    assert vs[1].text == "[[+P,+Q],[-Q,-P]]"
    assert vs[2].text == "[[+P,+Q],[+Q,+P]]"
    assert vs[4].text == "[[+P,+Q],[-Qt,+P]]"
    assert vs[64].grid == n_eq4(NCase.III).grid
    assert len({v.grid for v in vs}) == 128


def test_case_iv_swap_family_collapses():
    vs = enumerate_variants(n_printed(NCase.IV))
    assert len(vs) == 32
    assert len({v.grid for v in vs}) == 16
