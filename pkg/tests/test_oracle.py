"""Monodromy enumeration: anchors, invariants, budgets, independence."""

import ast
import inspect
from fractions import Fraction

import pytest

import orbifold_hurwitz.oracle as oracle_module
from orbifold_hurwitz import (
    BudgetExceededError,
    FactorizationInstance,
    HurwitzIndex,
    MemoTable,
    count_monodromy_tuples,
    orbifold_hurwitz,
    raw_tuple_count,
    verify_against_oracle,
)
from orbifold_hurwitz.oracle import (
    count_of_cycle_type,
    cycle_type,
    enumerate_monodromy_tuples,
    estimated_steps,
    label_assignment_count,
    perms_of_cycle_type,
    transpositions,
)

F = Fraction


# ---------------------------------------------------------------------------
# permutation plumbing
# ---------------------------------------------------------------------------


def test_cycle_type():
    assert cycle_type((1, 2, 0, 3)) == (3, 1)
    assert cycle_type((0, 1, 2)) == (1, 1, 1)
    assert cycle_type((1, 0, 3, 2)) == (2, 2)


def test_transposition_count():
    assert len(transpositions(4)) == 6
    assert len(transpositions(1)) == 0


def test_perms_of_cycle_type_matches_counting_formula():
    for d, shape in [(3, (3,)), (4, (2, 2)), (4, (2, 1, 1)), (5, (3, 2))]:
        assert len(perms_of_cycle_type(d, shape)) == count_of_cycle_type(d, shape)


def test_label_assignment_count():
    assert label_assignment_count((3, 1)) == 1
    assert label_assignment_count((1, 1)) == 2
    assert label_assignment_count((2, 2, 1)) == 2
    assert label_assignment_count((2, 2, 2)) == 6


# ---------------------------------------------------------------------------
# normalization anchors (must all hold before the oracle is trusted)
# ---------------------------------------------------------------------------


def test_anchor_one_part_base_case():
    # the two 3-cycles, no transpositions: 2 / (3! 0!) = 1/3
    assert raw_tuple_count(3, (3,), 0) == 2
    assert count_monodromy_tuples(FactorizationInstance(3, 0, (3,))) == F(1, 3)
    for r in (1, 2, 4):
        assert count_monodromy_tuples(FactorizationInstance(r, 0, (r,))) == F(1, r)


def test_anchor_two_part_simple_cover():
    # 24 transposition triples in S_3 with transposition product, transitive
    assert raw_tuple_count(1, (2, 1), 3) == 24
    assert count_monodromy_tuples(FactorizationInstance(1, 0, (2, 1))) == F(2, 3)


def test_anchor_two_part_orbifold_cover():
    assert count_monodromy_tuples(FactorizationInstance(2, 0, (3, 1))) == F(3, 2)


def test_repeated_parts_need_label_weighting():
    # tau_1 = tau_2 = (12) and two labelings: 2 / (2! 2!) = 1/2
    assert raw_tuple_count(1, (1, 1), 2) == 2
    assert count_monodromy_tuples(FactorizationInstance(1, 0, (1, 1))) == F(1, 2)


# ---------------------------------------------------------------------------
# invariants
# ---------------------------------------------------------------------------


def test_enumerated_tuples_satisfy_defining_relations():
    identity = (0, 1, 2, 3)
    tuples = list(enumerate_monodromy_tuples(2, (3, 1), 2))
    assert len(tuples) == raw_tuple_count(2, (3, 1), 2) == 72
    for t in tuples:
        assert t.product() == identity
        assert t.is_transitive()
        assert cycle_type(t.sigma0) == (2, 2)
        assert all(cycle_type(tau) == (2, 1, 1) for tau in t.taus)
        # label i sits on a cycle of length mu_i
        lengths = sorted(cycle_type(t.sigma_inf), reverse=True)
        assert sorted(lengths) == sorted((3, 1))


def test_explicit_label_enumeration_matches_formula():
    from orbifold_hurwitz.oracle import _enumerate_label_assignments

    for mu in [(3, 1), (1, 1), (2, 2, 1), (2, 2, 2), (4,), (1, 1, 1), (2, 1, 1)]:
        shape = tuple(sorted(mu, reverse=True))
        explicit = _enumerate_label_assignments(mu, shape)
        assert len(explicit) == label_assignment_count(mu)
        assert len(set(explicit)) == len(explicit)
        # a mismatched shape admits no assignment at all
        assert _enumerate_label_assignments(mu, shape + (1,)) == []


def test_transitivity_filter_discards_disconnected_tuples():
    # with no transpositions a trivial sigma_0 never acts transitively on 2 sheets
    assert raw_tuple_count(1, (1, 1), 0, require_transitive=True) == 0
    assert raw_tuple_count(1, (1, 1), 0, require_transitive=False) == 2


def test_counts_are_invariant_under_sigma0_conjugation():
    reps = perms_of_cycle_type(3, (3,))
    counts = {raw_tuple_count(3, (3,), 2, sigma0=p) for p in reps}
    assert len(counts) == 1
    total = raw_tuple_count(3, (3,), 2)
    assert total == len(reps) * counts.pop()


def test_sigma0_parameter_type_checked():
    with pytest.raises(ValueError):
        raw_tuple_count(2, (2,), 1, sigma0=(0, 1))  # identity is not a 2-cycle


def test_instance_validation():
    with pytest.raises(ValueError):
        FactorizationInstance(2, 0, (3,))  # r does not divide d
    with pytest.raises(ValueError):
        FactorizationInstance(1, 0, (0,))
    with pytest.raises(BudgetExceededError):
        FactorizationInstance(1, 0, (7,))  # beyond the degree cap


def test_budget_refusal_is_loud():
    inst = FactorizationInstance(1, 3, (6,))  # s = 11: astronomically many tuples
    assert estimated_steps(1, 6, inst.s) > inst.max_steps
    with pytest.raises(BudgetExceededError):
        count_monodromy_tuples(inst)
    with pytest.raises(BudgetExceededError):
        FactorizationInstance(1, 10, (6,))  # s = 25 beyond the branch cap


def test_oracle_module_never_imports_the_recursion():
    tree = ast.parse(inspect.getsource(oracle_module))
    modules = []
    for node in ast.walk(tree):
        if isinstance(node, ast.Import):
            modules += [alias.name for alias in node.names]
        elif isinstance(node, ast.ImportFrom):
            modules.append(node.module or "")
    assert all("core" not in m and "orbifold" not in m for m in modules)


# ---------------------------------------------------------------------------
# agreement with the recursion
# ---------------------------------------------------------------------------


def test_small_sweep_agrees_with_recursion():
    report = verify_against_oracle((1,), 3, 3)
    assert report.passed
    assert len(report.cases) > 0


def test_genus_one_cover_of_degree_two():
    # single 2-sheeted torus cover: one tuple over 2! 3!
    assert count_monodromy_tuples(FactorizationInstance(1, 1, (2,))) == F(1, 12)
    assert orbifold_hurwitz(HurwitzIndex(1, 1, (2,)), MemoTable()) == F(1, 12)
