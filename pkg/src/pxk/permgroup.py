"""Finite permutation groups on a small ordered ground set.

Products are read left to right: ``p * q`` applies ``p`` first, then ``q``.
Groups are enumerated completely by breadth-first closure, which is exact
and fast enough for ground sets of up to eight points.
"""

from __future__ import annotations

import re
from collections import deque
from math import factorial, lcm, prod
from typing import Iterable, Mapping

from .complex import format_vertex, sorted_vertices


class GroupError(ValueError):
    pass


class Permutation:
    """A bijection of a finite set, stored by its moved points only."""

    __slots__ = ("_moves",)

    def __init__(self, mapping: Mapping | None = None):
        mapping = dict(mapping or {})
        if len(set(mapping.values())) != len(mapping) or set(mapping) != set(mapping.values()):
            raise GroupError(f"not a bijection: {mapping!r}")
        self._moves = {a: b for a, b in mapping.items() if a != b}

    @classmethod
    def from_cycles(cls, cycles: Iterable[Iterable]) -> "Permutation":
        m = {}
        for cyc in cycles:
            cyc = list(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if a in m:
                    raise GroupError("cycles are not disjoint")
                m[a] = b
        return cls(m)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse cycle notation such as ``(1 4 2)(3 5)`` or ``()``."""
        text = text.strip()
        if not re.fullmatch(r"(\([^()]*\)\s*)+", text):
            raise GroupError(f"bad cycle string {text!r}")
        cycles = []
        for body in re.findall(r"\(([^()]*)\)", text):
            toks = body.replace(",", " ").split()
            cycles.append([int(t) if re.fullmatch(r"-?\d+", t) else t for t in toks])
        return cls.from_cycles(cycles)

    def __call__(self, x):
        return self._moves.get(x, x)

    @property
    def support(self) -> tuple:
        return tuple(sorted_vertices(self._moves))

    def is_identity(self) -> bool:
        return not self._moves

    def __mul__(self, other: "Permutation") -> "Permutation":
        pts = set(self._moves) | set(other._moves)
        return Permutation({x: other(self(x)) for x in pts})

    def inverse(self) -> "Permutation":
        return Permutation({b: a for a, b in self._moves.items()})

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._moves == other._moves

    def __hash__(self):
        return hash(frozenset(self._moves.items()))

    def cycles(self) -> list[tuple]:
        seen = set()
        out = []
        for start in self.support:
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def is_transposition(self) -> bool:
        return len(self._moves) == 2

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles())) if self._moves else 1

    def __str__(self):
        if not self._moves:
            return "()"
        return "".join("(" + " ".join(format_vertex(v) for v in c) + ")" for c in self.cycles())

    def __repr__(self):
        return f"Permutation({self})"


class PermutationGroup:
    """Subgroup of Sym(ground) given by generators, with all elements listed."""

    def __init__(self, ground: Iterable, generators: Iterable[Permutation] = ()):
        self.ground = tuple(sorted_vertices(ground))
        if len(set(self.ground)) != len(self.ground):
            raise GroupError("ground set has repeated points")
        pos = {v: i for i, v in enumerate(self.ground)}
        self.generators = tuple(generators)
        gens = []
        for g in self.generators:
            if not set(g.support) <= pos.keys():
                raise GroupError(f"generator {g} moves points outside the ground set")
            gens.append(tuple(pos[g(v)] for v in self.ground))
        self._pos = pos
        self._elements = _closure(len(self.ground), gens)

    def _as_tuple(self, p: Permutation) -> tuple | None:
        if not set(p.support) <= self._pos.keys():
            return None
        return tuple(self._pos[p(v)] for v in self.ground)

    def _from_tuple(self, t) -> Permutation:
        return Permutation({v: self.ground[t[i]] for i, v in enumerate(self.ground)})

    @property
    def order(self) -> int:
        return len(self._elements)

    def __len__(self):
        return len(self._elements)

    def elements(self) -> list[Permutation]:
        return [self._from_tuple(t) for t in sorted(self._elements)]

    def __iter__(self):
        return iter(self.elements())

    def contains(self, p: Permutation) -> bool:
        t = self._as_tuple(p)
        return t is not None and t in self._elements

    __contains__ = contains

    def _check_ground(self, other: "PermutationGroup"):
        if self.ground != other.ground:
            raise GroupError("groups act on different ground sets")

    def __eq__(self, other):
        if not isinstance(other, PermutationGroup):
            return NotImplemented
        self._check_ground(other)
        return self._elements == other._elements

    __hash__ = None

    def equal(self, other: "PermutationGroup") -> bool:
        return self == other

    def is_subgroup(self, other: "PermutationGroup") -> bool:
        """True iff ``self`` is contained in ``other``."""
        self._check_ground(other)
        return self._elements <= other._elements

    def is_trivial(self) -> bool:
        return self.order == 1

    def orbits(self) -> list[tuple]:
        seen = set()
        out = []
        for v in self.ground:
            if v in seen:
                continue
            orb = {v}
            frontier = [v]
            while frontier:
                x = frontier.pop()
                for g in self.generators:
                    for y in (g(x), g.inverse()(x)):
                        if y not in orb:
                            orb.add(y)
                            frontier.append(y)
            seen |= orb
            out.append(tuple(sorted_vertices(orb)))
        return out

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"PermutationGroup(order={self.order}, gens=[{gens}])"


def _closure(n: int, gens: list[tuple]) -> frozenset:
    identity = tuple(range(n))
    seen = {identity}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = tuple(g[x[i]] for i in range(n))  # apply x, then g
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def generate(ground: Iterable, gens: Iterable[Permutation] = ()) -> PermutationGroup:
    return PermutationGroup(ground, gens)


def symmetric_group(ground: Iterable) -> PermutationGroup:
    pts = sorted_vertices(ground)
    gens = [Permutation({a: b, b: a}) for a, b in zip(pts, pts[1:])]
    return PermutationGroup(pts, gens)


def classify_symmetric_product(g: PermutationGroup) -> tuple[int, ...] | None:
    """Sorted orbit sizes if ``g`` is the full product of the symmetric groups
    on its orbits, otherwise ``None``.

    ``g`` always embeds in that product, so comparing orders decides it.
    """
    sizes = sorted(len(o) for o in g.orbits())
    if g.order == prod(factorial(s) for s in sizes):
        return tuple(sizes)
    return None


def describe(g: PermutationGroup) -> str:
    """Short human label; not a complete isomorphism classification."""
    part = classify_symmetric_product(g)
    if part is not None:
        factors = [f"S{s}" for s in part if s > 1]
        return " x ".join(reversed(factors)) if factors else "trivial"
    if any(p.order() == g.order for p in g):
        return f"cyclic of order {g.order}"
    return f"order {g.order}, not a product of symmetric groups"

