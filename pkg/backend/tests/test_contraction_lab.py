"""
Contraction lab: witness checks, witness search, element registry and nucleus.
"""

import itertools

import networkx as nx
import pytest

from common.config import Budgets
from common.contraction_lab import (
    ElementRegistry,
    NucleusStatus,
    Verdict,
    check_witness,
    cycle_reachable,
    nucleus,
    search_witness,
    section_digraph,
)
from common.element_algebra import (
    OrderStatus,
    compose,
    equal,
    format_element,
    generator,
    identity,
    parse_element,
    section,
)

CATALOGUE_KEYS = [749, 861, 882, 887, 920, 969, 2361, 2365, 2402, 2427]


def _witness(service, key):
    entry = service.get(key)
    g, v = service.witness(key)
    return entry.automaton, g, v


# Witness checks

@pytest.mark.parametrize("key", CATALOGUE_KEYS)
def test_catalogue_witnesses_are_non_contracting(service, key):
    automaton, g, v = _witness(service, key)
    report = check_witness(automaton, g, v)
    assert report.fixes_v
    assert report.section_is_self
    assert report.order.is_infinite_evidence
    assert report.verdict == Verdict.NON_CONTRACTING


def test_section_mismatch_is_rejected(catalogue_automaton):
    automaton = catalogue_automaton(861)
    report = check_witness(automaton, generator(automaton, "c"), (1,))
    assert report.fixes_v
    assert not report.section_is_self
    assert report.verdict == Verdict.REJECTED


def test_moved_word_is_rejected(catalogue_automaton):
    automaton = catalogue_automaton(887)
    report = check_witness(automaton, generator(automaton, "a"), (0,))
    assert not report.fixes_v
    assert report.verdict == Verdict.REJECTED


def test_finite_order_is_rejected(catalogue_automaton):
    automaton = catalogue_automaton(887)
    report = check_witness(
        automaton, parse_element(automaton, "b*c"), (0, 0), order=OrderStatus.finite(7, 3, [1, 7, 7])
    )
    assert report.verdict == Verdict.REJECTED


def test_unknown_order_is_candidate_only(catalogue_automaton):
    automaton = catalogue_automaton(861)
    report = check_witness(automaton, generator(automaton, "c"), (0, 1, 0), Budgets(max_depth=2))
    assert report.order.kind.value == "Unknown"
    assert report.verdict == Verdict.CANDIDATE_ONLY


def test_empty_witness_word(catalogue_automaton):
    automaton = catalogue_automaton(861)
    with pytest.raises(ValueError):
        check_witness(automaton, generator(automaton, "c"), ())


def test_report_to_dict(catalogue_automaton):
    automaton = catalogue_automaton(861)
    data = check_witness(automaton, generator(automaton, "c"), (0, 1, 0)).to_dict()
    assert data["g"] == "c"
    assert data["v"] == "010"
    assert data["verdict"] == "NonContracting"
    assert data["order"]["kind"] == "InfiniteEvidence"


# Witness search

def test_search_finds_920_witness(catalogue_automaton):
    automaton = catalogue_automaton(920)
    hits = search_witness(automaton, 1, 1)
    pairs = [(format_element(r.g), r.v) for r in hits]
    assert ("b", (1,)) in pairs
    assert all(r.fixes_v and r.section_is_self for r in hits)


def test_search_is_ordered_and_deterministic(catalogue_automaton):
    automaton = catalogue_automaton(861)
    first = search_witness(automaton, 1, 3)
    second = search_witness(automaton, 1, 3)
    assert [(format_element(r.g), r.v) for r in first] == [(format_element(r.g), r.v) for r in second]
    keys = [(len(r.g), len(r.v)) for r in first]
    assert keys == sorted(keys)
    assert ("c", (0, 1, 0)) in [(format_element(r.g), r.v) for r in first]


def test_search_rejects_bad_bounds(catalogue_automaton):
    with pytest.raises(ValueError):
        search_witness(catalogue_automaton(861), 0, 3)


@pytest.mark.slow
@pytest.mark.parametrize("key, max_word_len, max_v_len", [
    (861, 1, 3), (887, 2, 2), (969, 1, 1), (2361, 1, 1), (2365, 1, 1), (2402, 1, 1), (2427, 1, 1),
    (882, 6, 2), (749, 5, 4),
])
def test_search_rediscovers_catalogue_witness(service, key, max_word_len, max_v_len):
    automaton, g, v = _witness(service, key)
    hits = search_witness(automaton, max_word_len, max_v_len)
    assert (format_element(g), v) in [(format_element(r.g), r.v) for r in hits]


# Registry

def test_registry_merges_equal_elements(catalogue_automaton):
    automaton = catalogue_automaton(887)
    registry = ElementRegistry(automaton)
    index, opened = registry.add(parse_element(automaton, "c*a"))
    assert opened
    again, opened = registry.add(parse_element(automaton, "section(b*c,1)"))
    assert again == index and not opened
    trivial, opened = registry.add(parse_element(automaton, "a^2"))
    assert opened
    assert registry.find(identity(automaton)) == trivial
    assert len(registry) == 2


# Nucleus

def test_cycle_reachable():
    graph = nx.DiGraph([("s", "x"), ("x", "y"), ("y", "x"), ("y", "z"), ("w", "w")])
    assert cycle_reachable(graph) == {"x", "y", "z", "w"}


def test_nucleus_of_trivial_automaton(trivial):
    report = nucleus(trivial)
    assert report.status == NucleusStatus.STABILIZED
    assert [format_element(g) for g in report.elements] == ["1"]
    assert [format_element(g) for g in report.minimal_nucleus] == ["1"]


def test_nucleus_of_odometer(odometer):
    report = nucleus(odometer)
    assert report.stabilized
    assert report.size == 3
    assert sorted(format_element(g) for g in report.minimal_nucleus) == ["1", "a", "a^-1"]
    assert report.to_dict()["minimal_nucleus_size"] == 3


def test_odometer_nucleus_absorbs_products_after_six_levels(odometer):
    report = nucleus(odometer)
    members = report.minimal_nucleus
    for g, h in itertools.product(members, repeat=2):
        product = compose(g, h)
        for u in itertools.product((0, 1), repeat=6):
            rest = section(product, u)
            assert any(equal(rest, n) for n in members), (format_element(product), u)


def test_stabilized_nucleus_report_counts_work(odometer):
    report = nucleus(odometer)
    assert 0 < report.work_spent < Budgets().nucleus_work
    assert report.to_dict()["work_spent"] == report.work_spent


def test_nucleus_work_budget(catalogue_automaton):
    report = nucleus(catalogue_automaton(861), Budgets(nucleus_work=20))
    assert report.status == NucleusStatus.BUDGET_EXCEEDED
    assert "exceeded" in report.note
    assert report.elements == []


def test_section_digraph_leaves_registry_unchanged(odometer):
    registry = ElementRegistry(odometer)
    for text in ("1", "a", "a^-1"):
        registry.add(parse_element(odometer, text))
    graph = section_digraph(registry)
    assert len(registry) == 3
    assert set(graph.edges) == {(0, 0), (1, 0), (1, 1), (2, 0), (2, 2)}

    partial = ElementRegistry(odometer)
    partial.add(parse_element(odometer, "a"))
    graph = section_digraph(partial)
    assert len(partial) == 1
    assert set(graph.edges) == {(0, 0)}


@pytest.mark.slow
@pytest.mark.parametrize("key", CATALOGUE_KEYS)
def test_nucleus_never_stabilizes_on_catalogue(service, key):
    report = nucleus(service.get(key).automaton, Budgets())
    assert report.status == NucleusStatus.BUDGET_EXCEEDED
    assert report.note
