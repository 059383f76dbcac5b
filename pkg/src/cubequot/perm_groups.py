"""Permutation groups on points 0..degree-1 with exact order computation.

Permutations are tuples p of length degree with p[i] = image of i.
The group is stored as a base and strong generating set built by a
deterministic Schreier-Sims procedure, so orders are exact integers of
arbitrary size.
"""

from __future__ import annotations

from collections import deque
from typing import Iterator, Optional, Sequence


def identity_perm(degree: int) -> tuple[int, ...]:
    return tuple(range(degree))


def compose_perms(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """Apply p first, then q."""
    return tuple(map(q.__getitem__, p))


def invert_perm(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def is_identity_perm(p: Sequence[int]) -> bool:
    return all(p[i] == i for i in range(len(p)))


class PermutationGroup:
    """Group generated incrementally; membership and order via BSGS.

    A strong generator lives at the deepest level whose base prefix it
    fixes pointwise; the stabilizer H^(i) is generated by the strong
    generators at levels >= i. After every growing insertion the chain
    condition is restored bottom-up (deepest level first), so orbits that
    grow at shallow levels are re-examined.

    New base points are chosen greedily: the moved point lying on the
    longest cycle of the offending residue (smallest such point on ties).
    """

    def __init__(self, degree: int):
        self.degree = degree
        self.base: list[int] = []
        self._gens: list[list[tuple[int, ...]]] = []
        # _transversals[i]: orbit point -> element of H^(i) mapping base[i] to it.
        self._transversals: list[dict[int, tuple[int, ...]]] = []
        self.generators: list[tuple[int, ...]] = []

    # -- basic queries ------------------------------------------------

    def order(self) -> int:
        n = 1
        for t in self._transversals:
            n *= len(t)
        return n

    def __contains__(self, p: Sequence[int]) -> bool:
        residue, _ = self._sift_from(tuple(p), 0)
        return residue is None

    def orbit_of(self, point: int) -> set[int]:
        orbit = {point}
        frontier = [point]
        while frontier:
            a = frontier.pop()
            for g in self.generators:
                b = g[a]
                if b not in orbit:
                    orbit.add(b)
                    frontier.append(b)
        return orbit

    def orbits(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for v in range(self.degree):
            if v in seen:
                continue
            orb = sorted(self.orbit_of(v))
            seen.update(orb)
            out.append(orb)
        return out

    def elements(self, limit: Optional[int] = None) -> Iterator[tuple[int, ...]]:
        """Enumerate all elements as transversal products (cross-check tool)."""
        if limit is not None and self.order() > limit:
            raise ValueError(f"group order {self.order()} exceeds limit {limit}")

        def rec(level: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
            if level < 0:
                yield acc
                return
            for t in self._transversals[level].values():
                yield from rec(level - 1, compose_perms(acc, t))

        yield from rec(len(self.base) - 1, identity_perm(self.degree))

    # -- construction -------------------------------------------------

    def add_generator(self, p: Sequence[int]) -> bool:
        """Add a permutation; returns True if the group grew."""
        p = tuple(p)
        if len(p) != self.degree:
            raise ValueError("degree mismatch")
        residue, level = self._sift_from(p, 0)
        if residue is None:
            return False
        self.generators.append(p)
        self._insert(residue, level)
        self._rebuild()
        return True

    def _sift_from(self, p: tuple[int, ...], start: int):
        """Strip p through chain levels >= start; (None, _) means membership."""
        for i in range(start, len(self.base)):
            img = p[self.base[i]]
            t = self._transversals[i].get(img)
            if t is None:
                return p, i
            p = compose_perms(p, invert_perm(t))
        if is_identity_perm(p):
            return None, len(self.base)
        return p, len(self.base)

    def _new_base_point(self, residue: tuple[int, ...]) -> int:
        best_point = -1
        best_len = 0
        seen = [False] * self.degree
        for i in range(self.degree):
            if seen[i] or residue[i] == i:
                continue
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                length += 1
                j = residue[j]
            if length > best_len:
                best_len = length
                best_point = i
        return best_point

    def _insert(self, residue: tuple[int, ...], level: int) -> None:
        if level == len(self.base):
            self.base.append(self._new_base_point(residue))
            self._gens.append([])
            self._transversals.append({})
        self._gens[level].append(residue)

    def _level_gens(self, level: int) -> list[tuple[int, ...]]:
        return [g for lvl in range(level, len(self._gens)) for g in self._gens[lvl]]

    def _rebuild(self) -> None:
        """Restore the chain condition bottom-up over all levels."""
        i = len(self.base) - 1
        while i >= 0:
            self._orbit_transversal(i)
            trans = self._transversals[i]
            gens = self._level_gens(i)
            offender_level = -1
            for a in list(trans):
                ta = trans[a]
                for g in gens:
                    tb = trans[g[a]]
                    schreier = compose_perms(compose_perms(ta, g), invert_perm(tb))
                    residue, drop = self._sift_from(schreier, i + 1)
                    if residue is not None:
                        self._insert(residue, drop)
                        offender_level = drop
                        break
                if offender_level >= 0:
                    break
            if offender_level >= 0:
                i = offender_level  # repair the deeper level first, then climb
            else:
                i -= 1

    def _orbit_transversal(self, level: int) -> None:
        b = self.base[level]
        gens = self._level_gens(level)
        trans = {b: identity_perm(self.degree)}
        frontier = deque([b])
        while frontier:
            a = frontier.popleft()
            ta = trans[a]
            for g in gens:
                c = g[a]
                if c not in trans:
                    trans[c] = compose_perms(ta, g)
                    frontier.append(c)
        self._transversals[level] = trans


def group_from_generators(degree: int, gens: Sequence[Sequence[int]]) -> PermutationGroup:
    group = PermutationGroup(degree)
    for g in gens:
        group.add_generator(g)
    return group
