"""
The fan corpus shared by the tests: named smooth complete fans with an ample class, and
generators of random smooth complete surfaces, lattice changes and relabelings.
"""
from fractions import Fraction
from typing import Dict, List, NamedTuple, Sequence, Tuple

from toricbound.divisor import KaehlerClass
from toricbound.fan import Fan


class CorpusEntry(NamedTuple):
    """A fan with an ample Kaehler class and its known gamma."""
    name: str
    fan: Fan
    kappa: KaehlerClass
    gamma: Fraction


def p2() -> Fan:
    #pylint:disable=missing-docstring
    return Fan.build(2, [(1, 0), (0, 1), (-1, -1)], [[0, 1], [1, 2], [2, 0]])


def p1xp1() -> Fan:
    #pylint:disable=missing-docstring
    return Fan.build(2, [(1, 0), (-1, 0), (0, 1), (0, -1)], [[0, 2], [2, 1], [1, 3], [3, 0]])


def h2() -> Fan:
    #pylint:disable=missing-docstring
    return Fan.build(2, [(-1, 2), (0, 1), (1, 0), (0, -1)], [[0, 1], [1, 2], [2, 3], [3, 0]])


def blp2() -> Fan:
    #pylint:disable=missing-docstring
    return Fan.build(2, [(1, 0), (1, 1), (0, 1), (-1, -1)], [[0, 1], [1, 2], [2, 3], [3, 0]])


def p3() -> Fan:
    #pylint:disable=missing-docstring
    return Fan.build(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)],
                     [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])


def p1xp2() -> Fan:
    #pylint:disable=missing-docstring
    return Fan.build(3, [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, 0, 1), (0, -1, -1)],
                     [[i, j, k] for i in (0, 1) for j, k in ((2, 3), (3, 4), (2, 4))])


def single_cone() -> Fan:
    #pylint:disable=missing-docstring
    return Fan.build(2, [(1, 0), (0, 1)], [[0, 1]])


def corpus() -> List[CorpusEntry]:
    """The smooth complete corpus with ample classes."""
    return [
        CorpusEntry('P2', p2(), KaehlerClass.of([0, 0, 1]), Fraction(1)),
        CorpusEntry('P1xP1', p1xp1(), KaehlerClass.of([0, 1, 0, 1]), Fraction(1)),
        CorpusEntry('H2', h2(), KaehlerClass.of([0, 0, 1, 1]), Fraction(1)),
        CorpusEntry('BlP2', blp2(), KaehlerClass.of([0, 0, 1, 1]), Fraction(1)),
        CorpusEntry('P3', p3(), KaehlerClass.of([0, 0, 0, 1]), Fraction(1)),
        CorpusEntry('P1xP2', p1xp2(), KaehlerClass.of([0, 1, 0, 0, 2]), Fraction(1)),
    ]


def blowup_surface(base: str, steps: Sequence[int]) -> Fan:
    """Blow up torus fixed points of a smooth complete surface.

    Args:
        base: 'P2' or 'P1xP1'.
        steps: Each step inserts the sum of the rays of the cone steps[i] modulo the cone count.

    Returns:
        The smooth complete fan with rays in cyclic order.
    """
    rays: List[Tuple[int, ...]] = list(p2().rays if base == 'P2' else [(1, 0), (0, 1), (-1, 0),
                                                                          (0, -1)])
    for step in steps:
        idx = step % len(rays)
        first, second = rays[idx], rays[(idx + 1) % len(rays)]
        rays.insert(idx + 1, (first[0] + second[0], first[1] + second[1]))
    count = len(rays)
    return Fan.build(2, rays, [[i, (i + 1) % count] for i in range(count)])


def change_basis(fan: Fan, matrix: Sequence[Sequence[int]]) -> Fan:
    """Apply a unimodular matrix to every ray."""
    rays = [tuple(sum(row[j] * ray[j] for j in range(fan.dim)) for row in matrix)
            for ray in fan.rays]
    return Fan.build(fan.dim, rays, fan.max_cones)


def unimodular(dim: int, ops: Sequence[Tuple[int, int, int]]) -> List[List[int]]:
    """Build a unimodular matrix as a product of elementary row additions and swaps.

    Args:
        dim: The size.
        ops: (i, j, k) adds k times row j to row i when i != j, and swaps rows i, i+1 otherwise.

    Returns:
        The matrix.
    """
    mat = [[int(i == j) for j in range(dim)] for i in range(dim)]
    for i, j, k in ops:
        i, j = i % dim, j % dim
        if i != j:
            mat[i] = [a + k * b for a, b in zip(mat[i], mat[j])]
        else:
            nxt = (i + 1) % dim
            mat[i], mat[nxt] = mat[nxt], mat[i]
    return mat


def permute(fan: Fan, kappa: KaehlerClass, perm: Sequence[int]) -> Tuple[Fan, KaehlerClass]:
    """Relabel the rays: the new ray perm[i] is the old ray i."""
    inverse: Dict[int, int] = {new: old for old, new in enumerate(perm)}
    rays = [fan.rays[inverse[new]] for new in range(fan.ray_count)]
    cones = [[perm[idx] for idx in cone] for cone in fan.max_cones]
    kappa_new = KaehlerClass(tuple(kappa.kappa[inverse[new]] for new in range(fan.ray_count)))
    return Fan.build(fan.dim, rays, cones), kappa_new
