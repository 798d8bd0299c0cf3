"""
Contraction Lab Module

Non-contraction witnesses and the nucleus semi-algorithm.
"""

from .witness import (
    Verdict,
    WitnessReport,
    decide_verdict,
    check_witness,
    search_witness,
    reduced_words,
)
from .registry import ElementRegistry
from .nucleus import (
    NucleusStatus,
    NucleusReport,
    nucleus,
    section_digraph,
    section_closure_graph,
    cycle_reachable,
)

__all__ = [
    'Verdict',
    'WitnessReport',
    'decide_verdict',
    'check_witness',
    'search_witness',
    'reduced_words',
    'ElementRegistry',
    'NucleusStatus',
    'NucleusReport',
    'nucleus',
    'section_digraph',
    'section_closure_graph',
    'cycle_reachable',
]
