"""
Element Algebra Module

Exact computation with automaton group elements. Rightmost factor acts first.
"""

from .element import (
    GroupElement,
    identity,
    generator,
    element,
    compose,
    invert,
    power,
    format_element,
)
from .words import (
    Word,
    EPWord,
    canonical_ep,
    shift_equivalent,
    primitive_root,
    parse_word,
    parse_ep,
    format_word,
    format_ep,
)
from .action import act, section, act_and_section, act_ep
from .decision import is_identity, equal, power_is_identity, reduce_word, trivial_relators
from .levels import (
    LevelPermutation,
    OrderKind,
    OrderStatus,
    level_permutation,
    orbit_sizes,
    level_fingerprint,
    order_status,
)
from .expressions import parse_element
from . import stats

__all__ = [
    'GroupElement',
    'identity',
    'generator',
    'element',
    'compose',
    'invert',
    'power',
    'format_element',
    'Word',
    'EPWord',
    'canonical_ep',
    'shift_equivalent',
    'primitive_root',
    'parse_word',
    'parse_ep',
    'format_word',
    'format_ep',
    'act',
    'section',
    'act_and_section',
    'act_ep',
    'is_identity',
    'equal',
    'power_is_identity',
    'reduce_word',
    'trivial_relators',
    'LevelPermutation',
    'OrderKind',
    'OrderStatus',
    'level_permutation',
    'orbit_sizes',
    'level_fingerprint',
    'order_status',
    'parse_element',
    'stats',
]
