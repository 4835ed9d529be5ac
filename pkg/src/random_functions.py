"""
Random Complexes and Cell Functions

This module provides seeded generators of random cubical complexes and
interval-valued cell functions for the property suites.

Every generator takes a random.Random instance, so a fixed seed reproduces
the same sequence of instances.

The module can produce:
- Complexes in 1-D or 2-D with a bounded number of breakpoints per axis
- Cell functions with endpoints drawn from a small alphabet
- Ordered pairs (f <= g) by widening endpoints upward
- Nested pairs (f inside g) by widening endpoints outward
- s-continuous and H-continuous functions

Author: Andrew C
Version: 1.0
Last Updated: 10/19/2026
"""

import random
from typing import List, Optional, Sequence, Tuple

from src.baire_operators import graph_completion
from src.cell_complex import CellIntervalFunction, CubicalComplex, build_complex
from src.constants import OracleLimits, TestConstants
from src.continuity import extend_from_dense
from src.extreal_interval import ExtReal, Interval


def random_breakpoints(rng: random.Random, max_breakpoints: int) -> List[int]:
    """Between 1 and max_breakpoints distinct sorted integer breakpoints."""
    count = rng.randint(1, max_breakpoints)
    return sorted(rng.sample(range(-2 * max_breakpoints, 2 * max_breakpoints + 1), count))


def random_complex(rng: random.Random,
                   max_breakpoints: int = TestConstants.MAX_BREAKPOINTS_PER_AXIS,
                   dimension: Optional[int] = None) -> CubicalComplex:
    """
    A random 1-D or 2-D complex.

    Args:
        rng (random.Random): Source of randomness
        max_breakpoints (int): Upper bound on breakpoints per axis
        dimension (int, optional): Fixed dimension; random when None

    Returns:
        CubicalComplex: The complex
    """
    dimension = dimension or rng.choice((1, 2))
    return build_complex(dimension, [random_breakpoints(rng, max_breakpoints) for _ in range(dimension)])


def random_small_complex(rng: random.Random) -> CubicalComplex:
    """A random complex with at most 9 cells, small enough for the brute-force oracle."""
    if rng.random() < 0.5:
        return build_complex(2, [[rng.randint(-2, 2)], [rng.randint(-2, 2)]])
    # 2k + 1 <= 9 cells on the line
    count = rng.randint(1, (OracleLimits.MAX_CELLS - 1) // 2)
    return build_complex(1, [sorted(rng.sample(range(-5, 6), count))])


def random_alphabet(rng: random.Random, size: int,
                    pool: Sequence[ExtReal] = TestConstants.VALUE_POOL) -> List[ExtReal]:
    """size distinct sorted endpoint values drawn from the pool."""
    return sorted(rng.sample(list(pool), size))


def random_interval(rng: random.Random, alphabet: Sequence[ExtReal],
                    degenerate: bool = False) -> Interval:
    """A random interval with endpoints in the alphabet."""
    a, b = rng.choice(alphabet), rng.choice(alphabet)
    if degenerate:
        return Interval.point(a)
    return Interval(min(a, b), max(a, b))


def random_cell_function(rng: random.Random, complex_: CubicalComplex,
                         alphabet: Sequence[ExtReal] = TestConstants.VALUE_POOL,
                         degenerate: bool = False) -> CellIntervalFunction:
    """A cell function with independent random values on every cell."""
    return CellIntervalFunction(complex_, {
        c: random_interval(rng, alphabet, degenerate) for c in complex_.cells
    })


def _raise_to(rng: random.Random, value: ExtReal, alphabet: Sequence[ExtReal]) -> ExtReal:
    return rng.choice([a for a in alphabet if a >= value] or [value])


def _lower_to(rng: random.Random, value: ExtReal, alphabet: Sequence[ExtReal]) -> ExtReal:
    return rng.choice([a for a in alphabet if a <= value] or [value])


def widen_upward(rng: random.Random, f: CellIntervalFunction,
                 alphabet: Sequence[ExtReal] = TestConstants.VALUE_POOL) -> CellIntervalFunction:
    """
    A function g with f <= g: both endpoints of every value are raised.
    """
    values = {}
    for c, v in f.items():
        hi = _raise_to(rng, v.hi, alphabet)
        lo = _raise_to(rng, v.lo, [a for a in alphabet if a <= hi] or [v.lo])
        values[c] = Interval(lo, max(lo, hi))
    return CellIntervalFunction(f.complex, values)


def widen_outward(rng: random.Random, f: CellIntervalFunction,
                  alphabet: Sequence[ExtReal] = TestConstants.VALUE_POOL) -> CellIntervalFunction:
    """
    A function g with f(c) inside g(c) for every cell.
    """
    return CellIntervalFunction(f.complex, {
        c: Interval(_lower_to(rng, v.lo, alphabet), _raise_to(rng, v.hi, alphabet))
        for c, v in f.items()
    })


def random_s_continuous(rng: random.Random, complex_: CubicalComplex,
                        alphabet: Sequence[ExtReal]) -> CellIntervalFunction:
    """
    A random s-continuous function: the graph completion of a random function.

    Half of the time the top cells start point-valued, which makes
    H-continuous results common.
    """
    f = random_cell_function(rng, complex_, alphabet)
    if rng.random() < 0.5:
        f = f.with_values({c: Interval.point(f[c].lo) for c in complex_.top_cells})
    return graph_completion(f)


def random_h_continuous(rng: random.Random, complex_: CubicalComplex,
                        alphabet: Sequence[ExtReal] = TestConstants.VALUE_POOL) -> CellIntervalFunction:
    """A random H-continuous function: point values on the top cells, extended to the rest."""
    return extend_from_dense(complex_, {
        c: Interval.point(rng.choice(alphabet)) for c in complex_.top_cells
    })


def random_h_pair(rng: random.Random, complex_: CubicalComplex,
                  alphabet: Sequence[ExtReal] = TestConstants.VALUE_POOL
                  ) -> Tuple[CellIntervalFunction, CellIntervalFunction]:
    """
    Two H-continuous functions on the same complex.

    The second one is independent, raised above the first, or equal to it on
    the top cells, each a third of the time, so every comparison mode sees
    both outcomes.
    """
    f = random_h_continuous(rng, complex_, alphabet)
    roll = rng.random()
    if roll < 1 / 3:
        g = random_h_continuous(rng, complex_, alphabet)
    elif roll < 2 / 3:
        g = extend_from_dense(complex_, {
            c: Interval.point(_raise_to(rng, f[c].lo, alphabet)) for c in complex_.top_cells
        })
    else:
        g = extend_from_dense(complex_, {c: f[c] for c in complex_.top_cells})
    return f, g
