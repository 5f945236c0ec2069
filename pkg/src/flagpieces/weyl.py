"""Weyl group elements, length, Bruhat order, and minimal coset representatives.

Elements are stored as permutations of the root index set; multiplication is
composition and length is the count of positive roots sent negative. A
WeylGroup enumerates the whole (finite) group once, fixes the deterministic
element order (length, then lexicographically smallest reduced word), and
memoizes the Bruhat covering digraph plus its reachability closure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .rootsys import CartanDatum, RootSystem, build_root_system

# Default enumeration ceiling: admits every exceptional type up to E7
# (order 2,903,040); E8 requires an explicit override.
DEFAULT_MAX_ELEMENTS = 3_000_000


class GroupTooLargeError(RuntimeError):
    """Raised when enumeration would exceed the element-count ceiling."""


class WeylElement:
    """A group element as the induced permutation of the root index set."""

    __slots__ = ("group", "perm", "index", "length")

    def __init__(self, group: WeylGroup, perm: tuple[int, ...], index: int, length: int):
        self.group = group
        self.perm = perm
        self.index = index
        self.length = length

    def __mul__(self, other: WeylElement) -> WeylElement:
        if self.group is not other.group:
            raise ValueError("cannot multiply elements of different Weyl groups")
        p, q = self.perm, other.perm
        return self.group._by_perm[tuple(p[q[r]] for r in range(len(p)))]

    def inverse(self) -> WeylElement:
        g = self.group
        return g.elements[g._inverse_index[self.index]]

    @property
    def word(self) -> tuple[int, ...]:
        """The lexicographically smallest reduced word (1-based letters)."""
        return self.group._words[self.index]

    def root_image(self, r: int) -> int:
        """Index of w(alpha_r)."""
        return self.perm[r]

    def is_identity(self) -> bool:
        return self.length == 0

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return (
            isinstance(other, WeylElement)
            and self.group is other.group
            and self.perm == other.perm
        )

    def __hash__(self) -> int:
        return hash(self.perm)

    def __repr__(self) -> str:
        return f"W[{word_str(self)}]"


class WeylGroup:
    """The fully enumerated Weyl group of a root system (a group table)."""

    def __init__(self, root_system: RootSystem, max_elements: int = DEFAULT_MAX_ELEMENTS):
        self.root_system = root_system
        self.rank = root_system.rank
        n_roots = len(root_system.roots)
        n_pos = root_system.n_positive
        self._n_roots = n_roots
        self._n_pos = n_pos
        gens = [root_system.simple_reflection_table[i] for i in range(self.rank)]
        rng = range(n_roots)

        ident = tuple(rng)
        lengths: dict[tuple[int, ...], int] = {ident: 0}
        frontier = [ident]
        while frontier:
            nxt = []
            for p in frontier:
                for g in gens:
                    q = tuple(g[p[r]] for r in rng)
                    if q not in lengths:
                        lengths[q] = sum(1 for r in range(n_pos) if q[r] >= n_pos)
                        nxt.append(q)
                        if len(lengths) > max_elements:
                            raise GroupTooLargeError(
                                f"group of type {root_system.datum.label} exceeds the "
                                f"element ceiling {max_elements}; pass a larger "
                                f"max_elements to enumerate it anyway"
                            )
            frontier = nxt

        # lexicographically smallest reduced words, by greedy smallest left descent
        simple_pos = [root_system.simple_root_index(i) for i in range(1, self.rank + 1)]
        words: dict[tuple[int, ...], tuple[int, ...]] = {}
        for p in sorted(lengths, key=lengths.get):
            if p is ident or lengths[p] == 0:
                words[p] = ()
                continue
            inv = [0] * n_roots
            for r in rng:
                inv[p[r]] = r
            for i in range(self.rank):
                if inv[simple_pos[i]] >= n_pos:  # w^-1(alpha_i) < 0, left descent
                    g = gens[i]
                    rest = tuple(g[p[r]] for r in rng)
                    words[p] = (i + 1,) + words[rest]
                    break

        order = sorted(lengths, key=lambda p: (lengths[p], words[p]))
        self.elements: tuple[WeylElement, ...] = tuple(
            WeylElement(self, p, idx, lengths[p]) for idx, p in enumerate(order)
        )
        self._by_perm: dict[tuple[int, ...], WeylElement] = {
            e.perm: e for e in self.elements
        }
        self._words: tuple[tuple[int, ...], ...] = tuple(words[p] for p in order)
        inv_idx = []
        for e in self.elements:
            inv = [0] * n_roots
            for r in rng:
                inv[e.perm[r]] = r
            inv_idx.append(self._by_perm[tuple(inv)].index)
        self._inverse_index: tuple[int, ...] = tuple(inv_idx)
        self.identity: WeylElement = self.elements[0]
        self._simple_pos = tuple(simple_pos)
        self._parabolic_cache: dict[frozenset[int], tuple[WeylElement, ...]] = {}
        self._reps_cache: dict[tuple, tuple[WeylElement, ...]] = {}

    # -- basic structure ----------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def simple_indices(self) -> range:
        return range(1, self.rank + 1)

    def simple_reflection(self, i: int) -> WeylElement:
        if not 1 <= i <= self.rank:
            raise IndexError(f"simple index {i} out of range 1..{self.rank}")
        return self._by_perm[self.root_system.simple_reflection_table[i - 1]]

    def element_from_perm(self, perm: tuple[int, ...]) -> WeylElement:
        return self._by_perm[perm]

    def from_word(self, letters: Iterable[int]) -> WeylElement:
        w = self.identity
        for i in letters:
            w = w * self.simple_reflection(i)
        return w

    def multiply(self, a: WeylElement, b: WeylElement) -> WeylElement:
        return a * b

    def inverse(self, a: WeylElement) -> WeylElement:
        return a.inverse()

    def length(self, a: WeylElement) -> int:
        return a.length

    @cached_property
    def longest_element(self) -> WeylElement:
        return self.elements[-1]

    # -- descents and coset representatives ----------------------------------

    def right_descents(self, w: WeylElement) -> frozenset[int]:
        """{i : l(w s_i) < l(w)}, i.e. w(alpha_i) < 0."""
        n_pos = self._n_pos
        return frozenset(
            i + 1 for i, sp in enumerate(self._simple_pos) if w.perm[sp] >= n_pos
        )

    def left_descents(self, w: WeylElement) -> frozenset[int]:
        """{i : l(s_i w) < l(w)}, i.e. w^-1(alpha_i) < 0."""
        return self.right_descents(w.inverse())

    def sends_simple_positive(self, w: WeylElement, i: int) -> bool:
        """Whether w(alpha_i) is a positive root."""
        return w.perm[self._simple_pos[i - 1]] < self._n_pos

    def is_min_left_rep(self, w: WeylElement, subset) -> bool:
        """w in W^J: minimal in its coset w W_J."""
        return all(self.sends_simple_positive(w, j) for j in subset)

    def is_min_right_rep(self, w: WeylElement, subset) -> bool:
        """w in ^JW: minimal in its coset W_J w."""
        inv = w.inverse()
        return all(self.sends_simple_positive(inv, j) for j in subset)

    def min_coset_rep(self, w: WeylElement, subset, side: str = "right") -> WeylElement:
        """Minimal element of w W_J (side="right") or W_J w (side="left")."""
        J = sorted(subset)
        if side == "right":
            while True:
                for j in J:
                    if not self.sends_simple_positive(w, j):
                        w = w * self.simple_reflection(j)
                        break
                else:
                    return w
        if side == "left":
            return self.min_coset_rep(w.inverse(), J, "right").inverse()
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")

    def parabolic_elements(self, subset) -> tuple[WeylElement, ...]:
        """All elements of the standard parabolic subgroup W_J, in group order."""
        J = frozenset(subset)
        cached = self._parabolic_cache.get(J)
        if cached is not None:
            return cached
        gens = [self.simple_reflection(j) for j in sorted(J)]
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for g in gens:
                    u = w * g
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
            frontier = nxt
        out = tuple(sorted(seen, key=lambda e: e.index))
        self._parabolic_cache[J] = out
        return out

    def in_parabolic(self, w: WeylElement, subset) -> bool:
        """Whether w lies in W_J (every letter of a reduced word is in J)."""
        return set(w.word) <= set(subset)

    def min_coset_reps(self, subset, side: str = "right") -> tuple[WeylElement, ...]:
        """W^J (side="right": minimal in w W_J) or ^JW (side="left")."""
        J = frozenset(subset)
        key = (side, J)
        cached = self._reps_cache.get(key)
        if cached is not None:
            return cached
        if side == "right":
            out = tuple(e for e in self.elements if self.is_min_left_rep(e, J))
        elif side == "left":
            out = tuple(e for e in self.elements if self.is_min_right_rep(e, J))
        else:
            raise ValueError(f"side must be 'left' or 'right', got {side!r}")
        self._reps_cache[key] = out
        return out

    def min_double_coset_reps(self, left_subset, right_subset) -> tuple[WeylElement, ...]:
        """^JW^K: minimal representatives of W_J \\ W / W_K."""
        J, K = frozenset(left_subset), frozenset(right_subset)
        key = ("double", J, K)
        cached = self._reps_cache.get(key)
        if cached is not None:
            return cached
        out = tuple(
            e
            for e in self.elements
            if self.is_min_right_rep(e, J) and self.is_min_left_rep(e, K)
        )
        self._reps_cache[key] = out
        return out

    def double_coset_rep(self, w: WeylElement, left_subset, right_subset) -> WeylElement:
        """The unique element of ^JW^K inside W_J w W_K."""
        J, K = sorted(left_subset), sorted(right_subset)
        while True:
            prev = w
            w = self.min_coset_rep(w, K, "right")
            w = self.min_coset_rep(w, J, "left")
            if w is prev:
                return w

    # -- Bruhat order ---------------------------------------------------------

    @cached_property
    def reflections(self) -> tuple[WeylElement, ...]:
        """All reflections, one per positive root, in root order."""
        rs = self.root_system
        out = []
        for p in range(rs.n_positive):
            cp = rs.roots[p].coords
            perm = []
            for r in range(self._n_roots):
                pairing = rs.coroot_pairing(r, p)
                c = tuple(x - pairing * y for x, y in zip(rs.roots[r].coords, cp))
                perm.append(rs.index[c])
            out.append(self._by_perm[tuple(perm)])
        return tuple(out)

    @cached_property
    def bruhat_covers_up(self) -> tuple[tuple[int, ...], ...]:
        """For each element index u, the indices v with u covered by v."""
        ups: list[list[int]] = [[] for _ in self.elements]
        for u in self.elements:
            for t in self.reflections:
                v = u * t
                if v.length == u.length + 1:
                    ups[u.index].append(v.index)
        return tuple(tuple(sorted(vs)) for vs in ups)

    @cached_property
    def _bruhat_up_reach(self) -> tuple[int, ...]:
        # bitmask over element indices: bit v set in row u iff u <= v
        ups = self.bruhat_covers_up
        reach = [0] * self.order
        for u in sorted(self.elements, key=lambda e: -e.length):
            m = 1 << u.index
            for v in ups[u.index]:
                m |= reach[v]
            reach[u.index] = m
        return tuple(reach)

    def bruhat_leq(self, u: WeylElement, v: WeylElement) -> bool:
        """u <= v in the Bruhat order."""
        if u.group is not self or v.group is not self:
            raise ValueError("elements do not belong to this group")
        return (self._bruhat_up_reach[u.index] >> v.index) & 1 == 1

    def bruhat_lower_mask(self, v: WeylElement) -> int:
        """Bitmask over element indices u with u <= v."""
        reach = self._bruhat_up_reach
        bit = 1 << v.index
        mask = 0
        for u in range(self.order):
            if reach[u] & bit:
                mask |= 1 << u
        return mask


def enumerate_group(
    root_system: RootSystem, max_elements: int = DEFAULT_MAX_ELEMENTS
) -> WeylGroup:
    """Enumerate the Weyl group of a root system into a frozen group table."""
    return WeylGroup(root_system, max_elements)


def weyl_group(label_or_datum, max_elements: int = DEFAULT_MAX_ELEMENTS) -> WeylGroup:
    """Build the Weyl group of a type label ("B3") or CartanDatum."""
    if isinstance(label_or_datum, CartanDatum):
        datum = label_or_datum
    else:
        datum = CartanDatum.from_label(label_or_datum)
    return WeylGroup(build_root_system(datum), max_elements)


# -- word serialization (used verbatim by the CLI and JSON output) -----------


def word_str(w: WeylElement) -> str:
    """Serialize as comma-separated 1-based letters, "e" for the identity."""
    return ",".join(str(i) for i in w.word) if w.word else "e"


def parse_word(group: WeylGroup, text: str) -> WeylElement:
    """Parse a word string; non-reduced words are accepted and canonicalized."""
    s = text.strip()
    if s == "e" or s == "":
        return group.identity
    try:
        letters = [int(part) for part in s.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse word {text!r}: expected 'e' or comma-separated integers")
    for i in letters:
        if not 1 <= i <= group.rank:
            raise ValueError(f"word letter {i} out of range 1..{group.rank}")
    return group.from_word(letters)


def format_subset(subset) -> str:
    """Serialize a simple-index subset as comma-separated sorted indices."""
    return ",".join(str(j) for j in sorted(subset))


def parse_subset(group_or_rank, text: str) -> frozenset[int]:
    """Parse a comma-separated subset of simple indices; empty string allowed."""
    rank = group_or_rank if isinstance(group_or_rank, int) else group_or_rank.rank
    s = text.strip()
    if not s:
        return frozenset()
    try:
        parts = [int(p) for p in s.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse subset {text!r}: expected comma-separated integers")
    out = frozenset(parts)
    for j in parts:
        if not 1 <= j <= rank:
            raise ValueError(f"subset index {j} out of range 1..{rank}")
    if len(out) != len(parts):
        raise ValueError(f"subset {text!r} contains duplicate indices")
    return out
