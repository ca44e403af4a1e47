from hypothesis import given, strategies as st
import pytest

from chromod.dyck import (
    GuardError, Hess, HessError, area, area_sequence, as_complete_product, catalan,
    complete, complete_product, conjugate, enumerate_hess, from_values, from_word,
    irreducible_components, is_abelian, is_aligned, lollipop_hess, partitions,
    path_hess, product, to_word, transpose,
)


def test_from_values_validation():
    assert from_values((2, 3, 3)) == (2, 3, 3)
    assert from_values((1, 3, 3)) == (1, 3, 3)
    assert from_values((2, 2, 3)) == (2, 2, 3)
    for bad in [(3, 2, 3), (3, 2, 1), (0, 2, 2), (2, 3, 4), (1, 1, 3)]:
        with pytest.raises(HessError):
            from_values(bad)


def test_words():
    assert to_word((2, 3, 3)) == "nnenee"
    assert to_word((1, 2, 3, 4)) == "ne" * 4
    assert from_word("nnneee") == (3, 3, 3)
    with pytest.raises(HessError):
        from_word("neen")
    with pytest.raises(HessError):
        from_word("nxe")


def test_product():
    assert product(complete(2), complete(3)) == (2, 2, 5, 5, 5)
    assert product((2, 3, 3), ()) == (2, 3, 3)
    assert product((2, 2), (1,)) == (2, 2, 3)


def test_transpose_examples():
    assert transpose(complete(5)) == complete(5)
    assert transpose((2, 3, 3)) == (2, 3, 3)
    # nnneenenee reversed with n <-> e swapped is nnenenneee
    assert transpose((3, 3, 4, 5, 5)) == (2, 3, 5, 5, 5)
    assert transpose((2, 4, 4, 5, 5)) == (2, 4, 4, 5, 5)


def test_transpose_involution_and_area():
    for n in range(1, 8):
        for h in enumerate_hess(n):
            t = transpose(h)
            assert transpose(t) == h
            assert area(t) == area(h)


def test_components():
    assert irreducible_components((1, 2, 3)) == [(1,), (1,), (1,)]
    assert irreducible_components(complete(5)) == [complete(5)]
    assert irreducible_components((2, 2, 5, 5, 5)) == [(2, 2), (3, 3, 3)]


def test_aligned_and_abelian():
    assert is_aligned((2, 3, 3))
    assert not is_aligned((2, 4, 4, 5, 5))
    assert is_aligned(complete(6))
    assert is_abelian((3, 5, 5, 6, 6, 6))
    assert not is_abelian((2, 4, 4, 5, 5))
    assert is_abelian(complete(4))


def test_abelian_implies_aligned():
    for n in range(1, 9):
        for h in enumerate_hess(n):
            if is_abelian(h):
                assert is_aligned(h)


def test_area_sequences():
    assert area_sequence((2, 4, 4, 5, 5)) == (1, 2, 1, 1, 0)
    assert area_sequence((3, 3, 4, 5, 5)) == (2, 1, 1, 1, 0)
    assert area_sequence(complete(4)) == (3, 2, 1, 0)


def test_complete_products():
    assert complete_product((3, 1)) == (3, 3, 3, 4)
    assert as_complete_product((2, 3, 3)) is None
    assert as_complete_product((2, 2, 5, 5, 5)) == (3, 2)


def test_enumeration_counts():
    assert [sum(1 for _ in enumerate_hess(n)) for n in (1, 3, 5)] == [1, 5, 42]
    for n in range(1, 10):
        hs = list(enumerate_hess(n))
        assert len(hs) == catalan(n) == len(set(hs))
        assert hs == sorted(hs)


def test_enumeration_guard():
    with pytest.raises(GuardError):
        next(enumerate_hess(15))


def test_partitions_and_conjugate():
    assert len(partitions(6)) == 11
    assert conjugate((4, 3, 2, 2)) == (4, 4, 2, 1)
    for lam in partitions(7):
        assert conjugate(conjugate(lam)) == lam


def test_named_families():
    assert path_hess(5) == (2, 3, 4, 5, 5)
    assert lollipop_hess(2, 3) == (2, 3, 5, 5, 5)


@given(st.lists(st.booleans(), min_size=0, max_size=24))
def test_word_round_trip(bits):
    # build a valid Dyck word from an arbitrary bit string
    word, up, down = [], 0, 0
    for b in bits:
        if b:
            word.append("n")
            up += 1
        elif down < up:
            word.append("e")
            down += 1
    word.extend("e" * (up - down))
    h = from_word("".join(word))
    assert to_word(h) == "".join(word)
    assert isinstance(h, Hess)
