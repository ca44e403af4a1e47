import json

import pytest

from chromod import engine
from chromod.dyck import complete, enumerate_hess, is_aligned
from chromod.engine import (
    CsfReducer, EngineError, ExpansionReducer, RelationError, apply_relation,
    check_relation_conditions, choose_step, choose_step_aligned, choose_step_nonaligned,
    chu_vandermonde_terms, csf_e, csf_e_coeffs, csf_e_from_expansion, evaluate, expand,
    expand_multiplicative, q_binomial_general, relation_coefficients,
)
from chromod.qpoly import ONE, QPoly, QRat, q_factorial, q_int

Q1 = QPoly([1, 1])


def test_conditions_from_figures():
    # ne^{j-i}n^b sub-paths: one admissible choice, one breaking (3), one breaking (4)
    assert check_relation_conditions((3, 4, 4, 7, 7, 7, 9, 9, 9), 2, 4, 2)
    assert not check_relation_conditions((2, 4, 4, 6, 6, 8, 8, 8), 2, 4, 2)
    assert any(f.startswith("(3)") for f in engine.relation_failures((2, 4, 4, 6, 6, 8, 8, 8), 2, 4, 2))
    assert [f[:3] for f in engine.relation_failures((3, 4, 4, 6, 7, 8, 8, 8), 2, 4, 1)] == ["(4)"]


def test_conditions_direct():
    assert check_relation_conditions((2, 4, 4, 5, 5), 1, 2, 1)
    for n in range(2, 6):
        h = complete(n)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                for b in range(1, n):
                    assert not check_relation_conditions(h, i, j, b)


def test_first_split_of_worked_example():
    assert choose_step_nonaligned((2, 4, 4, 5, 5)) == (1, 2, 1)
    step = apply_relation((2, 4, 4, 5, 5), 1, 2, 1)
    assert step.h0 == (1, 4, 4, 5, 5)
    assert step.h2 == (3, 4, 4, 5, 5)
    assert step.coeff_h2 == QRat(1, Q1)
    assert step.coeff_h0 == QRat(QPoly([0, 1]), Q1)


def test_apply_relation_rejects_bad_triple():
    with pytest.raises(RelationError):
        apply_relation(complete(4), 1, 2, 1)


def test_relation_coefficients():
    for i, j, b in [(1, 2, 1), (1, 3, 2), (2, 5, 3), (1, 4, 5)]:
        c2, c0 = relation_coefficients(i, j, b)
        assert c2 + c0 == ONE
        # q = 1 specialization: (j - i)/(b + 1) and (b + 1 - j + i)/(b + 1)
        assert c2.num.coeffs and sum(c2.num.coeffs) * (b + 1) == (j - i) * sum(c2.den.coeffs)
    c2, c0 = relation_coefficients(1, 3, 1)
    assert c0 == QRat(0)


def test_choosers():
    assert choose_step_aligned((3, 5, 5, 6, 6, 6)) == (0, 2, 4, 1)
    assert choose_step_aligned((2, 3, 3)) == (0, 1, 2, 1)
    with pytest.raises(RelationError):
        choose_step_aligned(complete(4))
    with pytest.raises(RelationError):
        choose_step_nonaligned((2, 3, 3))


def test_chosen_steps_satisfy_conditions():
    for n in range(1, 9):
        for h in enumerate_hess(n):
            if engine.dyck.as_complete_product(h) is not None:
                continue
            i, j, b = choose_step(h)
            assert check_relation_conditions(h, i, j, b), (h, i, j, b)
            if not is_aligned(h):
                assert i == choose_step_nonaligned(h)[0]


def test_expand_small():
    assert expand(complete(3)) == {(3,): ONE}
    assert expand((2, 3, 3)) == {(3,): QRat(1, Q1), (2, 1): QRat(QPoly([0, 1]), Q1)}


def test_expansion_weights_sum_to_one():
    for n in range(1, 8):
        for h in enumerate_hess(n):
            exp = expand(h)
            assert evaluate(exp, lambda lam: ONE) == ONE
            assert all(sum(lam) == n for lam in exp)


def test_evaluate_with_mapping():
    exp = expand((2, 3, 3))
    assert evaluate(exp, {(3,): QRat(2), (2, 1): QRat(0)}) == QRat(2, Q1)
    with pytest.raises(KeyError):
        evaluate(exp, {(3,): ONE})


def test_csf_small():
    assert csf_e_coeffs((2, 3, 3)) == {(3,): q_int(3), (2, 1): QPoly([0, 1])}
    for n in range(1, 7):
        assert csf_e_coeffs(complete(n)) == {(n,): q_factorial(n)}
    assert csf_e((2, 4, 4, 5, 5)) != csf_e((3, 3, 4, 5, 5))


def test_two_routes_agree():
    for n in range(1, 8):
        for h in enumerate_hess(n):
            assert csf_e_from_expansion(h) == csf_e_coeffs(h)


def test_multiplicative_shortcut_agrees():
    for n in range(1, 7):
        for h in enumerate_hess(n):
            assert expand_multiplicative(h) == expand(h)


def test_relation_verifiers_small():
    for h in enumerate_hess(5):
        for i in range(1, 6):
            for j in range(i + 1, 6):
                try:
                    assert engine.verify_relation_basic(h, i, j)
                except RelationError:
                    pass


def test_q_binomial_general():
    assert q_binomial_general(4, 2) == QRat(QPoly([1, 1, 2, 1, 1]))
    assert q_binomial_general(3, 5) == QRat(0)
    # [-1 choose k] = (-1)^k q^{-k(k+1)/2}
    for k in range(5):
        val = q_binomial_general(-1, k)
        assert val * QRat(QPoly.monomial(k * (k + 1) // 2)) == QRat((-1) ** k)


def test_chu_vandermonde_a_equals_b_equals_one():
    # with a = b = 1 the identity is the three-term relation with b = 1
    for l in (1, 2):
        terms = chu_vandermonde_terms(1, 1 + l, 1, 1)
        assert terms == [QRat(q_int(2) - q_int(l)), QRat(q_int(l))]
    with pytest.raises(ValueError):
        chu_vandermonde_terms(1, 2, 1, 1, convention="nope")


def test_chu_vandermonde_literal_exponent_fails_somewhere():
    literal_ok = relations_ok = total = 0
    for n in range(1, 7):
        for h in enumerate_hess(n):
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    for a in range(1, j - i + 1):
                        for b in range(1, n + 1):
                            try:
                                r = engine.verify_chu_vandermonde(h, i, j, a, b)
                            except RelationError:
                                continue
                            total += 1
                            relations_ok += r
                            literal_ok += engine.verify_chu_vandermonde(h, i, j, a, b, convention="literal")
    assert total == relations_ok == 195
    assert literal_ok == 29


def test_memo_persistence_round_trip(tmp_path):
    for cls, path in [(CsfReducer, tmp_path / "csf.jsonl"), (ExpansionReducer, tmp_path / "exp.jsonl")]:
        eng = cls()
        eng((2, 4, 4, 5, 5))
        written = eng.save(str(path))
        assert written > 0
        header = json.loads(path.read_text().splitlines()[0])
        assert header == {"schema": "chromod/1", "kind": "memo", "domain": cls.domain}
        fresh = cls()
        assert fresh.load(str(path)) == written
        assert fresh((2, 4, 4, 5, 5)) == eng((2, 4, 4, 5, 5))
        assert fresh.steps == 0


def test_memo_domain_mismatch(tmp_path):
    path = tmp_path / "m.jsonl"
    eng = CsfReducer()
    eng((2, 3, 3))
    eng.save(str(path))
    with pytest.raises(ValueError):
        ExpansionReducer().load(str(path))


def test_step_limit():
    eng = CsfReducer(step_limit=3)
    with pytest.raises(EngineError):
        eng((2, 3, 4, 5, 6, 7, 7))
