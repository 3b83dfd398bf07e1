import pytest

from scrollex import (
    INFINITE,
    NotApplicable,
    NotOrderableError,
    QQ,
    build_graph,
    chordless_cycles,
    classify_edge,
    clique_complex,
    expand_cycle,
    gf,
    homology_witness,
    induced,
    initial_complex,
    is_2_linear_extension,
    lower_bound,
    p2_monomial,
    p2_report,
    parse_instance,
    upper_bound,
    validate_extension,
    virtual_edges,
    virtual_minimal_cycles,
)
from scrollex.bounds import Interval
from scrollex.extension import ScrollBlock, ScrollMatrix
from oracles import bfs_replacement_length, brute_virtual_cycles


def test_virtual_edges_examples(bruns, square_one_edge):
    assert virtual_edges(bruns) == {("a", "c"), ("d", "e")}
    assert virtual_edges(square_one_edge) == {("1", "2")}
    base = clique_complex(build_graph("abc", ["ab", "bc", "ca"]))
    assert virtual_edges(validate_extension(base, [])) == frozenset()


def test_virtual_edges_equal_base_deletions_for_any_permutation(corpus):
    for ext in corpus:
        base_edges = ext.base.skeleton.edges
        expected = virtual_edges(ext)
        for perms in ("star", "identity"):
            ic = initial_complex(ext, perms)
            assert frozenset(e for e in ic.deleted if e in base_edges) == expected


def test_virtual_cycle_census_fixtures(bruns, square_one_edge, flap_square):
    (vc,) = virtual_minimal_cycles(bruns)
    assert vc.cycle == ("a", "c", "d", "e") and vc.expandable
    (vh,) = virtual_minimal_cycles(square_one_edge)
    assert vh.cycle == ("1", "2", "3", "4") and vh.expandable
    (vf,) = virtual_minimal_cycles(flap_square)
    assert vf.cycle == ("a", "b", "c", "d") and vf.expandable


def test_virtual_cycle_census_matches_bruteforce(corpus):
    for ext in corpus:
        got = tuple(vc.cycle for vc in virtual_minimal_cycles(ext))
        assert got == brute_virtual_cycles(ext)


def test_census_empty_for_chordal_base():
    from scrollex.fixtures import chordal_instance

    for seed in range(5):
        ext, _ = parse_instance(chordal_instance(seed))
        assert virtual_minimal_cycles(ext) == ()


def test_every_virtual_cycle_contains_an_induced_cycle(corpus):
    for ext in corpus:
        g = ext.base.skeleton
        for vc in virtual_minimal_cycles(ext):
            assert chordless_cycles(induced(g, vc.cycle)) != ()


def test_classify_bruns(bruns):
    (vc,) = virtual_minimal_cycles(bruns)
    ac = vc.edge_classes[("a", "c")]
    assert (ac.kind, ac.t) == ("R1", 2)
    de = vc.edge_classes[("d", "e")]
    assert (de.kind, de.t, de.eta, de.jls) == ("R3", 3, 2, (1,))
    for e in (("c", "d"), ("a", "e")):
        assert vc.edge_classes[e].kind == "nonvirtual"
        assert vc.edge_classes[e].t == 1
    with pytest.raises(ValueError):
        classify_edge(vc.cycle, ("a", "d"), bruns)


def test_classify_square_one_edge(square_one_edge):
    (vc,) = virtual_minimal_cycles(square_one_edge)
    ec = vc.edge_classes[("1", "2")]
    assert (ec.kind, ec.t, ec.eta) == ("R3", 3, 2)


def test_classify_empty_first_block_gives_short_detour():
    # first block empty: the surviving edge {x0, x1} gives a length-two
    # detour through x1, so eta = 0 and the class is R2
    base = clique_complex(build_graph("abcde", ["ab", "bc", "ac", "cd", "de", "ae"]))
    ext = validate_extension(
        base,
        [
            ScrollMatrix(
                frozenset("abc"),
                "a",
                [ScrollBlock("b", ()), ScrollBlock("c", ("u", "v"))],
            )
        ],
    )
    (vc,) = virtual_minimal_cycles(ext)
    assert vc.cycle == ("a", "c", "d", "e")
    ec = vc.edge_classes[("a", "c")]
    assert (ec.kind, ec.t, ec.eta, ec.jls) == ("R2", 2, 0, (1, 2))
    assert bfs_replacement_length(ext, vc.cycle, ("a", "c")) == 2


def test_lower_bound_fixtures(bruns, square_one_edge, triangle_ring):
    value, wit = lower_bound(bruns)
    assert value == 4 and wit.cycle == ("a", "c", "d", "e")
    assert lower_bound(square_one_edge)[0] == 3
    with pytest.raises(NotOrderableError):
        lower_bound(triangle_ring)


def test_lower_bound_infinite_for_chordal_base():
    from scrollex.fixtures import chordal_instance

    ext, _ = parse_instance(chordal_instance(1))
    assert lower_bound(ext)[0] is INFINITE


def test_expand_cycle_fixtures(bruns, square_one_edge):
    (vc,) = virtual_minimal_cycles(bruns)
    ct = expand_cycle(vc, bruns)
    assert len(ct) == 7 and set(ct) == set("aczdxwe")
    (vh,) = virtual_minimal_cycles(square_one_edge)
    ch = expand_cycle(vh, square_one_edge)
    assert len(ch) == 6 and set(ch) == {"1", "2", "3", "4", "u", "v"}


def test_expand_cycle_without_virtual_edges_is_identity():
    # two disjoint squares; only the first is extended
    doc = {
        "vertices": list("abcdefgh"),
        "edges": [["a", "b"], ["b", "c"], ["c", "d"], ["a", "d"],
                  ["e", "f"], ["f", "g"], ["g", "h"], ["e", "h"]],
        "extensions": [
            {"facet": ["a", "b"], "x0": "a", "blocks": [{"x": "b", "y": ["u"]}]}
        ],
    }
    ext, _ = parse_instance(doc)
    cycles = {vc.cycle: vc for vc in virtual_minimal_cycles(ext)}
    assert set(cycles) == {tuple("abcd"), tuple("efgh")}
    assert expand_cycle(cycles[tuple("efgh")], ext) == tuple("efgh")


def test_expand_cycle_rejects_non_first_block():
    base = clique_complex(build_graph("abcde", ["ab", "bc", "ac", "cd", "de", "ae"]))
    ext = validate_extension(
        base,
        [
            ScrollMatrix(
                frozenset("abc"),
                "a",
                [ScrollBlock("b", ("p",)), ScrollBlock("c", ("z",))],
            )
        ],
    )
    cycles = [vc for vc in virtual_minimal_cycles(ext) if vc.cycle == tuple("acde")]
    (vc,) = cycles
    assert not vc.expandable
    with pytest.raises(ValueError):
        expand_cycle(vc, ext)


def test_homology_witness_fixtures(bruns, square_one_edge):
    (vc,) = virtual_minimal_cycles(bruns)
    ct = expand_cycle(vc, bruns)
    assert homology_witness(ct, bruns, QQ) == 1
    assert homology_witness(ct, bruns, gf(2)) == 1
    (vh,) = virtual_minimal_cycles(square_one_edge)
    assert homology_witness(expand_cycle(vh, square_one_edge), square_one_edge) == 1


def test_upper_bound_fixtures(bruns, square_one_edge, flap_square):
    assert upper_bound(bruns)[0] == 4
    assert upper_bound(square_one_edge)[0] == 3
    value, _ = upper_bound(flap_square)
    assert isinstance(value, NotApplicable) and "toricity" in value.reason


def test_upper_bound_no_expandable_cycle():
    base = clique_complex(build_graph("abcde", ["ab", "bc", "ac", "cd", "de", "ae"]))
    ext = validate_extension(
        base,
        [
            ScrollMatrix(
                frozenset("abc"),
                "a",
                [ScrollBlock("b", ("p",)), ScrollBlock("c", ("z",))],
            )
        ],
    )
    value, _ = upper_bound(ext)
    assert isinstance(value, NotApplicable) and "expandable" in value.reason


def test_is_two_linear_extension(bruns):
    from scrollex.fixtures import chordal_instance

    assert not is_2_linear_extension(bruns)
    ext, _ = parse_instance(chordal_instance(2))
    assert is_2_linear_extension(ext)


def test_report_bruns(bruns):
    rep = p2_report(bruns)
    assert not rep.two_linear
    assert rep.lower == rep.lower_substitution == rep.upper == rep.exact == 4
    assert all(rep.hypotheses[k] for k in (
        "admissible_order", "toric_gate", "expandable_family_complete", "block_sizes",
    ))


def test_report_square_one_edge(square_one_edge):
    rep = p2_report(square_one_edge)
    assert rep.exact == 3 == rep.lower == rep.upper


def test_report_chordal_short_circuit():
    from scrollex.fixtures import chordal_instance

    ext, _ = parse_instance(chordal_instance(3))
    rep = p2_report(ext)
    assert rep.two_linear
    assert rep.lower is INFINITE and rep.upper is INFINITE and rep.exact is INFINITE


def test_report_flap_square(flap_square):
    rep = p2_report(flap_square)
    assert rep.lower == 5 and rep.lower_substitution == 5
    assert isinstance(rep.upper, NotApplicable)
    assert isinstance(rep.exact, Interval)
    assert not rep.hypotheses["toric_gate"]


def test_report_not_orderable(triangle_ring):
    rep = p2_report(triangle_ring)
    assert isinstance(rep.lower, NotApplicable)
    assert isinstance(rep.exact, Interval)
    assert not rep.hypotheses["admissible_order"]


def test_substitution_lower_matches_initial_complex_p2_on_fixtures(
    bruns, square_one_edge, flap_square, cycle_extensions
):
    for ext in [bruns, square_one_edge, flap_square] + cycle_extensions:
        sub, _ = lower_bound(ext)
        cert = p2_monomial(initial_complex(ext, "star").graph).p2
        assert sub == cert


def test_replacement_lengths_match_bfs(corpus):
    for ext in corpus:
        for vc in virtual_minimal_cycles(ext):
            for e, ec in vc.edge_classes.items():
                if ec.kind == "nonvirtual":
                    continue
                assert bfs_replacement_length(ext, vc.cycle, e) == ec.t, (
                    ext, vc.cycle, e, ec,
                )


def test_cycle_extension_reports(cycle_extensions):
    for ext in cycle_extensions:
        n = len(ext.base.skeleton.vertices)
        s = len(ext.skeleton_bar.vertices) - n
        rep = p2_report(ext)
        assert rep.exact == n + s - 3
        assert rep.lower == rep.upper == rep.exact
