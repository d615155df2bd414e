import itertools

import pytest
from hypothesis import given, settings, strategies as st

from transpoly import chord, checks, delta_matroid as dm, ribbon
from transpoly.delta_matroid import SetSystem, SetSystemParseError
from transpoly.gf2 import SimpleGraph
from transpoly.polynomial import ONE, Polynomial, parse_text
from transpoly.ribbon import Edge, RibbonGraph

import oracles


def S(ground, *sets):
    """S("ab", "", "ab") is the system on {a, b} with feasible sets {} and {a, b}."""
    return SetSystem.from_sets(tuple(ground), [tuple(s) for s in sets])


def as_frozen(d):
    return frozenset(frozenset(s) for s in d.sets())


LOOP = RibbonGraph(((0, 1),), (Edge("a", 0, 1, 0),))
TWISTED_LOOP = RibbonGraph(((0, 1),), (Edge("a", 0, 1, 1),))
TORUS = RibbonGraph(((0, 1, 2, 3),), (Edge("a", 0, 2, 0), Edge("b", 1, 3, 0)))


@pytest.fixture(scope="module")
def ribbon_systems():
    return checks.distinct_delta_matroids(ribbon.one_vertex_family(3) + ribbon.multi_vertex_family(3))


set_systems = st.integers(1, 4).flatmap(
    lambda n: st.sets(st.integers(0, (1 << n) - 1), min_size=1).map(
        lambda fam: SetSystem(tuple("abcd"[:n]), tuple(fam))))


# the container and its text format -----------------------------------------------------

def test_set_system_basics():
    d = S("abc", "", "ab", "ac")
    assert d.feasible == (0, 3, 5)
    assert d.mask("bc") == 6
    assert set(d.sets()) == {frozenset(), frozenset("ab"), frozenset("ac")}
    assert SetSystem(("a",), (1, 1, 0)) == SetSystem(("a",), (0, 1))
    with pytest.raises(ValueError):
        SetSystem(("a", "a"), (0,))
    with pytest.raises(ValueError):
        SetSystem(("a",), (2,))
    with pytest.raises(ValueError):
        S("a", "b")
    with pytest.raises(KeyError):
        d.index("z")


def test_text_round_trip():
    d = S("abc", "", "ab", "ac", "c")
    assert d.to_text() == "ground: a b c\nfeasible: {}, {c}, {a b}, {a c}\n"
    assert dm.parse(d.to_text()) == d
    assert SetSystem.parse("ground:\nfeasible: {}\n") == SetSystem((), (0,))
    assert SetSystem.parse("# x\nground: a\nfeasible:\n") == SetSystem(("a",), ())


@pytest.mark.parametrize(
    "text",
    ["ground: a\n", "feasible: {}\n", "ground: a\nfeasible: {a\n", "ground: a\nfeasible: {} {a}\n",
     "ground: a\nfeasible: {b}\n", "ground a\nfeasible: {}\n", "ground: a a\nfeasible: {}\n"],
)
def test_parse_errors(text):
    with pytest.raises(SetSystemParseError):
        dm.parse(text)


# symmetric exchange --------------------------------------------------------------------

@pytest.mark.parametrize(
    "d, ok", [(S("", ""), True), (S("ab", "", "ab"), True), (S("abc", "", "abc"), False)]
)
def test_validate_sea(d, ok):
    assert dm.validate_sea(d) is ok


def test_validate_sea_empty_family():
    with pytest.raises(ValueError):
        dm.validate_sea(SetSystem(("a",), ()))


def test_constructed_systems_are_delta_matroids(ribbon_systems):
    for d in ribbon_systems:
        assert dm.validate_sea(d)
        assert dm.validate_sea(dm.twist(d, d.ground[:1]))
    for n in range(1, 5):
        for w in chord.enumerate_diagrams(n):
            assert dm.validate_sea(dm.from_simple_graph(chord.intersection_graph(w)))


# unary operations ----------------------------------------------------------------------

def test_twist():
    d = S("a", "")
    assert dm.twist(d, []) == d
    assert dm.twist(d, "a") == S("a", "a")
    assert d * "a" == S("a", "a")
    e = S("abc", "", "ab", "bc")
    assert dm.twist(dm.twist(e, "ab"), "ab") == e
    assert dm.twist(e, ["a", "b"]) == S("abc", "ab", "", "ac")


def test_loop_complement():
    assert dm.loop_complement(S("a", ""), "a") == S("a", "", "a")
    assert S("a", "", "a") + "a" == S("a", "")
    e = S("abc", "", "ab", "bc")
    assert e + "c" + "c" == e
    with pytest.raises(KeyError):
        dm.loop_complement(e, "z")


def test_dual_pivot():
    d = S("a", "")
    # +a gives {0, a}; *a gives {a, 0}; +a removes {a}
    assert dm.dual_pivot(d, "a") == S("a", "")
    assert dm.dual_pivot(d, []) == d
    e = S("abc", "", "ab", "bc", "abc")
    assert dm.dual_pivot(e, "b") == ((e + "b") * "b") + "b"


@given(set_systems, st.data())
def test_dual_pivot_has_both_forms(d, data):
    u = data.draw(st.sampled_from(d.ground))
    assert ((d + u) * u) + u == ((d * u) + u) * u
    assert dm.twist(dm.loop_complement(dm.twist(d, u), u), u) == dm.dual_pivot(d, u)
    assert as_frozen(dm.dual_pivot(d, u)) == oracles.dual_pivot(as_frozen(d), {u})


@given(set_systems, st.data())
def test_operations_match_oracle(d, data):
    A = data.draw(st.sets(st.sampled_from(d.ground)))
    fam = as_frozen(d)
    assert as_frozen(dm.twist(d, A)) == oracles.twist(fam, A)
    assert as_frozen(dm.loop_complement(d, A)) == oracles.plus_set(fam, A)
    assert as_frozen(dm.dual_pivot(d, A)) == oracles.dual_pivot(fam, A)


@given(set_systems, st.data())
def test_single_element_operations_commute(d, data):
    if len(d.ground) < 2:
        return
    u, v = data.draw(st.permutations(d.ground))[:2]
    assert d + u + v == d + v + u
    assert d * u * v == d * v * u
    assert (d + u) * v == (d * v) + u
    assert dm.dual_pivot(dm.dual_pivot(d, u), v) == dm.dual_pivot(dm.dual_pivot(d, v), u)


@given(set_systems, st.data())
def test_involutions(d, data):
    A = data.draw(st.sets(st.sampled_from(d.ground)))
    assert dm.twist(dm.twist(d, A), A) == d
    assert dm.loop_complement(dm.loop_complement(d, A), A) == d
    assert dm.dual_pivot(dm.dual_pivot(d, A), A) == d


# deletion and contraction ------------------------------------------------------------------

def test_bridge_and_loop_branches():
    bridge = S("e", "e")
    assert dm.is_bridge(bridge, "e") and not dm.is_loop(bridge, "e")
    assert dm.delete(bridge, "e") == S("", "")
    loop = S("a", "")
    assert dm.is_loop(loop, "a") and not dm.is_bridge(loop, "a")
    assert dm.contract(loop, "a") == S("", "")
    k2 = S("ab", "", "ab")
    assert not dm.is_bridge(k2, "a") and not dm.is_loop(k2, "a")
    assert dm.delete(k2, "a") == S("b", "")
    assert dm.contract(k2, "a") == S("b", "b")


def test_deletion_keeps_remaining_labels():
    d = S("abc", "", "ac", "bc")
    assert dm.delete(d, "b") == S("ac", "", "ac")
    assert dm.contract(d, "c") == S("ab", "a", "b")


def test_d0_and_d_of():
    assert dm.d0(S("ab", "", "ab")) == 0
    assert dm.d0(S("e", "e")) == 1
    assert dm.d_of(S("ab", "", "ab"), "a") == 1
    assert dm.d_of(S("ab", "", "ab"), ["a", "b"]) == 0
    with pytest.raises(ValueError):
        dm.d0(SetSystem(("a",), ()))


def test_d0_under_deletion(ribbon_systems):
    # deleting a bridge lowers d0 by one; deleting anything else keeps it
    assert dm.d0(S("e", "e")) == dm.d0(dm.delete(S("e", "e"), "e")) + 1
    assert checks.check_d0_deletion(ribbon_systems).passed


def test_deletion_identities_on_small_systems():
    for n in range(2, 4):
        for fam in itertools.islice(itertools.combinations(range(1 << n), 3), 200):
            d = SetSystem(tuple("abc"[:n]), fam)
            for u, v in itertools.permutations(d.ground, 2):
                assert dm.delete(d + u, v) == dm.delete(d, v) + u
                assert dm.delete(d * u, v) == dm.delete(d, v) * u
            for u in d.ground:
                assert dm.delete(d + u, u) == dm.delete(d, u)


# graphs ----------------------------------------------------------------------------------------

def test_from_simple_graph():
    assert dm.from_simple_graph(SimpleGraph.from_pairs(["v"], [])) == S("v", "")
    assert dm.from_simple_graph(SimpleGraph.from_pairs("uv", [("u", "v")])) == S("uv", "", "uv")
    k3 = dm.from_simple_graph(SimpleGraph.from_pairs("abc", [("a", "b"), ("b", "c"), ("a", "c")]))
    assert k3 == S("abc", "", "ab", "bc", "ac")


def test_from_ribbon_graph():
    assert dm.from_ribbon_graph(LOOP) == S("a", "")
    assert dm.from_ribbon_graph(TWISTED_LOOP) == S("a", "", "a")
    assert dm.from_ribbon_graph(TORUS) == S("ab", "", "ab")
    with pytest.raises(ValueError):
        dm.from_ribbon_graph(RibbonGraph(((), ()), ()))


def test_one_vertex_systems_are_intersection_graph_systems():
    for n in range(1, 5):
        for w in chord.enumerate_diagrams(n):
            assert dm.from_ribbon_graph(ribbon.from_word(w)) == dm.from_simple_graph(chord.intersection_graph(w))


@pytest.mark.parametrize("d, graphic", [(S("v", ""), True), (S("a", "a"), False), (S("uv", "", "uv"), True),
                                        (S("a", "", "a"), False), (S("abc", "", "abc"), False)])
def test_is_graphic(d, graphic):
    assert dm.is_graphic(d) is graphic


def test_is_graphic_with_loops():
    assert dm.is_graphic(S("a", "", "a"), loops=True)
    assert not dm.is_graphic(S("a", "a"), loops=True)
    for n in range(1, 4):
        for w in chord.enumerate_diagrams(n):
            assert dm.is_graphic(dm.from_simple_graph(chord.intersection_graph(w)))


@pytest.mark.parametrize("r, count", [(LOOP, 2), (TWISTED_LOOP, 1), (TORUS, 1)])
def test_bc_anchors(r, count):
    assert ribbon.boundary_components(r) == count
    assert dm.bc(dm.from_ribbon_graph(r)) == count


def test_bc_matches_boundary(ribbon_systems):
    graphs = ribbon.one_vertex_family(3) + ribbon.multi_vertex_family(3)
    for r in graphs:
        assert dm.bc(dm.from_ribbon_graph(r)) == ribbon.boundary_components(r)


def test_bc_of_full_dual_is_d0_plus_one(ribbon_systems):
    assert checks.check_dual_bc(ribbon_systems).passed


def test_vertex_count():
    graphs = ribbon.one_vertex_family(3) + ribbon.multi_vertex_family(3)
    for r in graphs:
        assert dm.d0(dm.from_ribbon_graph(r)) + 1 == ribbon.vertex_count(r)


# the two moves ---------------------------------------------------------------------------------

def test_slide_examples():
    d = S("ab", "", "b")
    assert dm.slide(d, "a", "b") == S("ab", "", "b", "a")
    assert dm.slide(dm.slide(d, "a", "b"), "a", "b") == d
    # sliding a bridge a over anything changes nothing
    bridge = S("ab", "a", "ab")
    assert dm.slide(bridge, "a", "b") == bridge
    assert dm.exchange(bridge, "a", "b") == bridge
    # but sliding over a bridge b does
    assert dm.slide(S("ab", "b", "ab"), "a", "b") == S("ab", "a", "b", "ab")
    with pytest.raises(ValueError):
        dm.slide(d, "a", "a")
    with pytest.raises(KeyError):
        dm.exchange(d, "a", "z")


def test_moves_match_chord_moves_through_intersection_graphs():
    def D(w):
        return dm.from_simple_graph(chord.intersection_graph(w))

    assert dm.exchange(D((0, 1, 0, 1)), 0, 1) == D((0, 0, 1, 1))
    for n in range(2, 5):
        for w in chord.enumerate_diagrams(n):
            for i, a, b in chord.adjacent_pairs(w):
                assert dm.exchange(D(w), a, b) == D(chord.first_move(w, i))
                assert dm.slide(D(w), a, b) == D(chord.second_move(w, i))


@given(set_systems, st.data())
def test_moves_are_involutions(d, data):
    if len(d.ground) < 2:
        return
    a, b = data.draw(st.permutations(d.ground))[:2]
    assert dm.slide(dm.slide(d, a, b), a, b) == d
    assert dm.exchange(dm.exchange(d, a, b), a, b) == d


def test_moves_fix_systems_when_the_moving_element_is_a_bridge(ribbon_systems):
    seen = 0
    for d in ribbon_systems:
        for a, b in itertools.permutations(d.ground, 2):
            if dm.is_bridge(d, a):
                seen += 1
                assert dm.slide(d, a, b) == d
                assert dm.exchange(d, a, b) == d
    assert seen > 0


def test_algebraic_identities_on_random_systems():
    systems = checks.random_set_systems(120, seed=9)
    for res in checks.check_algebra(systems):
        assert res.passed, res.report()


# the polynomial --------------------------------------------------------------------------------

def test_q_dm_anchors():
    assert dm.q_dm(SetSystem((), (0,))) == ONE
    assert oracles.q_dm_oracle(("a",), [set()]) == {(1, 0, 0): 1, (0, 1, 1): 1, (0, 1, 0): -1}
    assert dm.q_dm(S("a", "")) == parse_text("s + t*x - t")
    assert oracles.q_dm_oracle(("a",), [set(), {"a"}]) == {(1, 0, 0): 1, (0, 1, 0): 1, (0, 1, 1): -1}
    assert dm.q_dm(S("a", "", "a")) == parse_text("s + t - t*x")
    with pytest.raises(ValueError):
        dm.q_dm(SetSystem(("a",), ()))


@settings(max_examples=60)
@given(set_systems)
def test_q_dm_matches_oracle(d):
    assert dm.q_dm(d) == Polynomial(oracles.q_dm_oracle(d.ground, d.sets()))


def test_q_dm_equals_q_ribbon():
    graphs = ribbon.one_vertex_family(3) + ribbon.multi_vertex_family(3)
    for r in graphs:
        assert dm.q_dm(dm.from_ribbon_graph(r)) == ribbon.q_ribbon(r)


def test_four_term_examples(ribbon_systems):
    for w in chord.enumerate_diagrams(3):
        d = dm.from_ribbon_graph(ribbon.from_word(w))
        for a, b in itertools.permutations(d.ground, 2):
            assert dm.four_term_dm(d, a, b).is_zero()
    bridge = S("ab", "b", "ab")
    assert dm.four_term_dm(bridge, "a", "b").is_zero()
    with pytest.raises(ValueError):
        dm.four_term_dm(bridge, "a", "a")


def test_four_term_on_partial_duals(ribbon_systems):
    small = [d for d in ribbon_systems if len(d.ground) <= 2]
    for d in small:
        for k in range(len(d.ground) + 1):
            for A in itertools.combinations(d.ground, k):
                e = dm.twist(d, A)
                for a, b in itertools.permutations(e.ground, 2):
                    assert dm.four_term_dm(e, a, b).is_zero()
