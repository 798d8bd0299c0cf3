"""
Self-Similarity Graph Module

Finite balls of the self-similarity graph and the divergence experiment.
"""

from .ball import (
    GraphBall,
    HORIZONTAL,
    VERTICAL,
    ball_size,
    build_ball,
    distance,
    outside_ball_distance,
    degree_bound,
    render_ball_dot,
)
from .divergence import (
    DivergenceRow,
    DivergenceReport,
    displaced_word,
    divergence_experiment,
    divergence_table,
    orbit_profile,
)

__all__ = [
    'GraphBall',
    'HORIZONTAL',
    'VERTICAL',
    'ball_size',
    'build_ball',
    'distance',
    'outside_ball_distance',
    'degree_bound',
    'render_ball_dot',
    'DivergenceRow',
    'DivergenceReport',
    'displaced_word',
    'divergence_experiment',
    'divergence_table',
    'orbit_profile',
]
