import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from hadamard_forge.errors import CheckedOverflowError, ShapeMismatchError, SizeCapError, ZeroEntryError
from hadamard_forge.matrix import (
    SignMatrix,
    add,
    all_ones,
    back_diagonal,
    block,
    identity,
    kron,
    matmul,
    pack,
    packed_dot,
    packed_dots_after,
    scale,
    tail_mask,
    transpose,
    unpack,
)

from conftest import residue_conference, residue_paley


def sign_arrays(rows, cols):
    return arrays(np.int64, (rows, cols), elements=st.sampled_from([-1, 1]))


small = st.integers(1, 4)


def test_basic_constants():
    assert identity(3).tolist() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert all_ones(2).tolist() == [[1, 1], [1, 1]]
    assert back_diagonal(3).tolist() == [[0, 0, 1], [0, 1, 0], [1, 0, 0]]
    r = back_diagonal(7)
    assert r.T @ r == identity(7)
    j = all_ones(2)
    assert j @ j == 2 * j


def test_immutable():
    m = SignMatrix([[1, -1], [1, 1]])
    with pytest.raises(ValueError):
        m.entries[0, 0] = 5
    src = np.array([[1, 1], [1, -1]])
    m = SignMatrix(src)
    src[0, 0] = 7
    assert m.tolist() == [[1, 1], [1, -1]]


def test_conference_gram_q5():
    c = SignMatrix(residue_conference(5))
    assert c @ c.T == 5 * identity(5) - all_ones(5)


def test_kron_examples():
    b = SignMatrix([[1, -1], [-1, 1]])
    k = kron(identity(2), b)
    assert k.tolist() == [[1, -1, 0, 0], [-1, 1, 0, 0], [0, 0, 1, -1], [0, 0, -1, 1]]
    assert kron(SignMatrix(np.ones((2, 3))), b).shape == (4, 6)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_kron_laws(data):
    r = [data.draw(small) for _ in range(6)]
    a = SignMatrix(data.draw(sign_arrays(r[0], r[1])))
    b = SignMatrix(data.draw(sign_arrays(r[2], r[3])))
    c = SignMatrix(data.draw(sign_arrays(r[4], r[5])))
    assert kron(kron(a, b), c) == kron(a, kron(b, c))
    assert transpose(kron(a, b)) == kron(a.T, b.T)
    # mixed product with conformable right-hand factors
    cshape = data.draw(small)
    dshape = data.draw(small)
    cc = SignMatrix(data.draw(sign_arrays(r[1], cshape)))
    dd = SignMatrix(data.draw(sign_arrays(r[3], dshape)))
    assert kron(a, b) @ kron(cc, dd) == kron(a @ cc, b @ dd)


def test_overflow_and_shape_errors():
    big = SignMatrix([[2**40]])
    with pytest.raises(CheckedOverflowError):
        scale(big, 2**30)
    with pytest.raises(CheckedOverflowError):
        matmul(big, big)
    with pytest.raises(ShapeMismatchError):
        add(identity(2), identity(3))
    with pytest.raises(ShapeMismatchError):
        matmul(SignMatrix(np.ones((2, 3))), identity(2))
    with pytest.raises(SizeCapError):
        kron(identity(300), identity(300))
    with pytest.raises(ValueError):
        identity(0)


def test_block():
    i2 = identity(2)
    m = block([[i2, -i2], [i2, i2]])
    assert m.tolist()[0] == [1, 0, -1, 0]
    assert m.shape == (4, 4)


def test_pack_examples():
    h8 = SignMatrix(residue_paley(7))
    p = pack(h8)
    assert p.words == 1
    assert unpack(p) == h8
    assert packed_dot(p, 3, 3) == 8
    assert all(packed_dot(p, 0, j) == 0 for j in range(1, 8))
    ones = pack(all_ones(5))
    assert not ones.bit_rows.any()
    neg = pack(SignMatrix(np.vstack([np.ones(70), -np.ones(70)])))
    assert packed_dot(neg, 0, 1) == -70


def test_pack_rejects_zero():
    c = SignMatrix(residue_conference(5))
    with pytest.raises(ZeroEntryError) as e:
        pack(c)
    assert (e.value.i, e.value.j) == (0, 0)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_packed_dot_matches_dense(data):
    n = data.draw(st.integers(1, 256))
    rows = data.draw(st.integers(2, 6))
    arr = data.draw(sign_arrays(rows, n))
    p = pack(SignMatrix(arr))
    # tail bits stay clear
    assert not (p.bit_rows & ~tail_mask(n)).any()
    assert unpack(p) == SignMatrix(arr)
    for i in range(rows):
        for j in range(rows):
            assert packed_dot(p, i, j) == int(arr[i] @ arr[j])
        assert list(packed_dots_after(p, i)) == [int(arr[i] @ arr[j]) for j in range(i + 1, rows)]


def test_tail_mask():
    assert tail_mask(64).tolist() == [2**64 - 1]
    assert tail_mask(65).tolist() == [2**64 - 1, 1]
    assert tail_mask(3).tolist() == [7]
