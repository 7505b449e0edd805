import json
import random

import pytest
from hypothesis import given, strategies as st

from homcore.cycles import (CycleHom, InvariantViolation, bipartite_witness,
                            check_bipartite_witness_preconditions, cycle_coloring_components,
                            interchange, is_proper_coloring, ladder_witness, odd_cycle_witness,
                            return_number, tau_pattern, witness_separates)
from homcore.graph import (Graph, PreconditionError, circular_ladder_graph, complete_bipartite_graph,
                           complete_graph, cube_graph, cycle_graph, path_graph)
from homcore.hom import hom_components
from homcore.suites import proper_cycle_colorings, small_graphs, witness_fixtures

K3 = complete_graph(3)


def test_return_number_examples():
    assert return_number(CycleHom.of((1, 2, 3, 1, 2, 3))) == 0
    assert return_number(CycleHom.of((1, 2, 3, 1, 2, 3, 1, 2))) == 1
    assert return_number(CycleHom.of((1, 2, 3, 1, 2, 3, 1, 2, 3, 2))) == 2
    assert return_number(CycleHom.of((1, 2, 3, 4), m=4)) == 0
    assert return_number(CycleHom.of((1, 4, 3, 2), m=4)) == 4


def test_cycle_hom_validation():
    with pytest.raises(ValueError):
        CycleHom.of((1, 1, 2))
    with pytest.raises(ValueError):
        CycleHom.of((1, 3), m=4)
    with pytest.raises(ValueError):
        CycleHom(4, 3, (1, 2, 3))
    with pytest.raises(ValueError):
        CycleHom.of((0, 1, 2))


def test_interchange_examples():
    assert interchange((1, 2, 1, 2), 1, 2) == (2, 1, 2, 1)
    assert interchange((1, 2, 3), 2, 3) == (1, 3, 2)
    with pytest.raises(ValueError):
        interchange((1, 2), 1, 1)


@given(st.lists(st.integers(1, 4), min_size=1, max_size=12), st.sampled_from([(1, 2), (1, 3), (2, 4), (3, 4)]))
def test_interchange_is_an_involution(col, pair):
    assert interchange(interchange(col, *pair), *pair) == tuple(col)


def test_interchange_keeps_proper_colorings_proper():
    g = cycle_graph(7)
    for col in proper_cycle_colorings(7):
        assert is_proper_coloring(g, interchange(col, 1, 3))


def test_five_cycle_return_numbers_complement():
    # on C_5 the return number is 1 or 4, and swapping two colors exchanges them
    for col in proper_cycle_colorings(5):
        r = return_number(CycleHom.of(col))
        assert r in (1, 4)
        for pair in ((1, 2), (1, 3), (2, 3)):
            assert return_number(CycleHom.of(interchange(col, *pair))) == 5 - r


def test_return_numbers_complement_small_cycles():
    for n in range(3, 9):
        for col in proper_cycle_colorings(n):
            r = return_number(CycleHom.of(col))
            assert return_number(CycleHom.of(interchange(col, 1, 2))) == n - r


def test_components_of_cycle_maps_share_return_number():
    for n in range(3, 9):
        comps, returns = cycle_coloring_components(n)
        by_label: dict = {}
        for lab, r in zip(comps.labels, returns):
            assert by_label.setdefault(lab, r) == r


def test_tau_pattern_examples():
    assert tau_pattern(3).image == (1, 2, 3, 1, 2, 3)
    assert tau_pattern(4).image == (1, 2, 3, 1, 2, 3, 1, 2)
    assert tau_pattern(5).image == (1, 2, 3, 1, 2, 3, 1, 2, 3, 2)
    assert [return_number(tau_pattern(k)) for k in (3, 4, 5)] == [0, 1, 2]
    with pytest.raises(ValueError):
        tau_pattern(2)


def test_tau_pattern_return_number_at_most_two():
    for k in range(3, 40):
        t = tau_pattern(k)
        assert t.n == 2 * k and return_number(t) <= 2


# -- odd cycles ----------------------------------------------------------------

def test_odd_cycle_witness_on_five_cycle():
    w = odd_cycle_witness(cycle_graph(5))
    r1 = return_number(w.tau_restriction)
    r2 = return_number(CycleHom.of([w.eta_swapped[v] for v in w.cycle]))
    assert r1 + r2 == 5
    assert witness_separates(cycle_graph(5), w)


def test_odd_cycle_witness_on_triangle():
    w = odd_cycle_witness(complete_graph(3))
    assert hom_components(complete_graph(3), K3).count == 6
    assert witness_separates(complete_graph(3), w)


def test_odd_cycle_witness_needs_three_colors():
    with pytest.raises(PreconditionError):
        odd_cycle_witness(complete_graph(4))
    with pytest.raises(PreconditionError):
        odd_cycle_witness(cycle_graph(6))


def test_odd_cycle_witness_small_graphs():
    from homcore.graph import chromatic_number
    for g in small_graphs(6, connected=True):
        if chromatic_number(g) == 3:
            w = odd_cycle_witness(g)
            assert is_proper_coloring(g, w.eta) and is_proper_coloring(g, w.eta_swapped)
            assert len(w.cycle) % 2 == 1
            assert witness_separates(g, w)


# -- component separation passes to supergraphs --------------------------------

def _restriction_classes_are_consistent(big: Graph, small: Graph, keep: list[int]) -> bool:
    """Maps in one component of Hom(big, K_3) restrict into one component of Hom(small, K_3)."""
    cb, cs = hom_components(big, K3), hom_components(small, K3)
    seen: dict = {}
    for f, lab in zip(cb.maps, cb.labels):
        target = cs.label_of(tuple(f[v] for v in keep))
        if seen.setdefault(lab, target) != target:
            return False
    return True


def test_distinct_components_stay_distinct_in_supergraphs():
    for big in small_graphs(6):
        if big.n == 0:
            continue
        for e in big.edges():
            small = Graph(big.n, [x for x in big.edges() if x != e])
            assert _restriction_classes_are_consistent(big, small, list(range(big.n)))
        for v in range(big.n):
            small = big.remove_vertices([v])
            assert _restriction_classes_are_consistent(big, small, list(small.labels))


# -- bipartite graphs ------------------------------------------------------------

def test_bipartite_witness_on_six_cycle():
    w = bipartite_witness(cycle_graph(6))
    assert w.eta == (1, 2, 3, 1, 2, 3)
    assert w.eta_swapped == (2, 1, 3, 2, 1, 3)
    assert w.swap_pair == (1, 2)
    assert witness_separates(cycle_graph(6), w)


def test_bipartite_witness_json():
    doc = json.loads(bipartite_witness(cycle_graph(8)).to_json())
    assert set(doc) == {"eta", "eta_swapped", "swap", "cycle", "tau"}
    assert doc["tau"] == [1, 2, 3, 1, 2, 3, 1, 2]


@pytest.mark.parametrize("name", sorted(witness_fixtures()))
def test_bipartite_witness_fixtures(name):
    g = witness_fixtures()[name]
    w = bipartite_witness(g)
    assert is_proper_coloring(g, w.eta)
    assert [w.eta[v] for v in w.cycle] == list(tau_pattern(len(w.cycle) // 2).image)
    assert witness_separates(g, w)


@pytest.mark.parametrize("g, reason", [
    (circular_ladder_graph(6), "H1"),
    (cube_graph(), "H1"),
    (complete_bipartite_graph(2, 3), "folds"),
    (cycle_graph(5), "bipartite"),
    (Graph(7, cycle_graph(6).edges()), "connected"),
    (Graph(0), "connected"),
    (path_graph(4), "folds"),
])
def test_bipartite_witness_preconditions_are_named(g, reason):
    with pytest.raises(PreconditionError) as exc:
        bipartite_witness(g)
    assert reason in str(exc.value)


def test_h2_precondition():
    # K_{2,3} plus a long cycle through it, so it does not fold to an edge
    g = Graph(8, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (4, 5), (5, 6), (6, 7), (7, 2)])
    with pytest.raises(PreconditionError) as exc:
        check_bipartite_witness_preconditions(g)
    assert "H2" in str(exc.value)


def _random_qualifying_graphs(count, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        k = rng.choice([3, 4, 5])
        n = rng.randint(2 * k + 1, 2 * k + 5)
        edges = {(i, (i + 1) % (2 * k)) for i in range(2 * k)}
        for v in range(2 * k, n):
            edges.add((rng.randrange(v), v))
            if rng.random() < 0.4:
                edges.add((rng.randrange(v), v))
        g = Graph(n, {tuple(sorted(e)) for e in edges})
        try:
            check_bipartite_witness_preconditions(g)
        except PreconditionError:
            continue
        out.append(g)
    return out


def test_bipartite_witness_on_random_qualifying_graphs():
    for g in _random_qualifying_graphs(60, seed=21):
        w = bipartite_witness(g)
        assert witness_separates(g, w)


def test_invariant_violation_is_a_runtime_error():
    assert issubclass(InvariantViolation, RuntimeError)


# -- the circular ladder -------------------------------------------------------

def test_ladder_witness():
    g, w = ladder_witness()
    assert g == circular_ladder_graph(6)
    assert is_proper_coloring(g, w.eta)
    assert return_number(w.tau_restriction) == 0
    assert witness_separates(g, w)
