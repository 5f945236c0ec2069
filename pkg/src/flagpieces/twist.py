"""Diagram automorphisms and the twisted conjugation action x . y = d(x) y x^-1.

A diagram automorphism d permutes the simple roots while preserving the
Cartan matrix; it acts on the Weyl group by relabeling root indices. For a
subset J of simple indices this module computes the twisted W_J-orbits and
their minimal elements, the stabilizer type of a minimal coset
representative, the class decomposition of W, the one-step cyclic-shift
relation w -> s_d(j) w s_j (when length does not grow), its strongly
connected components, and strong conjugacy via length-additive steps.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .rootsys import RootSystem
from .weyl import WeylElement, WeylGroup


class AutomorphismError(ValueError):
    """The permutation does not define a diagram automorphism."""


class DiagramAutomorphism:
    """A Cartan-matrix-preserving permutation of the simple-root indices."""

    def __init__(self, root_system: RootSystem, images, spec: str | None = None):
        self.root_system = root_system
        rank = root_system.rank
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, rank + 1)):
            raise AutomorphismError(
                f"images {images} are not a permutation of 1..{rank}"
            )
        a = root_system.datum.cartan_matrix
        for i in range(rank):
            for j in range(rank):
                if a[images[i] - 1][images[j] - 1] != a[i][j]:
                    raise AutomorphismError(
                        f"permutation {images} is not Cartan-preserving: "
                        f"a[{images[i]}][{images[j]}] != a[{i+1}][{j+1}]"
                    )
        self.images = images
        self.spec = spec if spec is not None else ",".join(str(i) for i in images)
        # induced permutation of root indices
        index = root_system.index
        perm = []
        for root in root_system.roots:
            c = [0] * rank
            for i, x in enumerate(root.coords):
                c[images[i] - 1] = x
            perm.append(index[tuple(c)])
        self.root_perm = tuple(perm)
        inv = [0] * len(perm)
        for r, s in enumerate(perm):
            inv[s] = r
        self.inv_root_perm = tuple(inv)

    @classmethod
    def from_spec(cls, root_system: RootSystem, spec: str) -> DiagramAutomorphism:
        """Parse "id", "flip", "tri"/"tri2" (D4), or explicit images "2,1,3"."""
        rank = root_system.rank
        family = root_system.datum.family
        s = spec.strip()
        if s == "id":
            return cls(root_system, range(1, rank + 1), spec="id")
        if s == "flip":
            if family == "A" and rank >= 2:
                images = [rank + 1 - i for i in range(1, rank + 1)]
            elif family == "D":
                images = list(range(1, rank + 1))
                images[rank - 2], images[rank - 1] = rank, rank - 1
            elif family == "E" and rank == 6:
                images = [6, 2, 5, 4, 3, 1]
            else:
                raise AutomorphismError(
                    f"'flip' is not defined for type {root_system.datum.label}"
                )
            return cls(root_system, images, spec="flip")
        if s in ("tri", "tri2"):
            if not (family == "D" and rank == 4):
                raise AutomorphismError(f"{s!r} is only defined for type D4")
            images = [3, 2, 4, 1] if s == "tri" else [4, 2, 1, 3]
            return cls(root_system, images, spec=s)
        try:
            images = [int(p) for p in s.split(",")]
        except ValueError:
            raise AutomorphismError(
                f"cannot parse automorphism {spec!r}: expected 'id', 'flip', "
                f"'tri', 'tri2', or explicit images like '2,1,3'"
            )
        return cls(root_system, images)

    def __call__(self, i: int) -> int:
        """Image of a simple index (1-based)."""
        return self.images[i - 1]

    def inverse_image(self, i: int) -> int:
        return self.images.index(i) + 1

    def subset(self, J) -> frozenset[int]:
        """Image of a subset of simple indices."""
        return frozenset(self.images[j - 1] for j in J)

    @property
    def is_identity(self) -> bool:
        return all(self.images[i] == i + 1 for i in range(len(self.images)))

    def __repr__(self) -> str:
        return f"DiagramAutomorphism({self.root_system.datum.label}, {self.spec})"


def delta_on_element(delta: DiagramAutomorphism, w: WeylElement) -> WeylElement:
    """Image of w under the group automorphism induced by delta."""
    if w.group.root_system is not delta.root_system:
        raise ValueError("automorphism and element belong to different root systems")
    rp, inv = delta.root_perm, delta.inv_root_perm
    perm = w.perm
    return w.group.element_from_perm(tuple(rp[perm[inv[r]]] for r in range(len(perm))))


def support(w: WeylElement) -> frozenset[int]:
    """Simple indices below w in Bruhat order = letters of every reduced word."""
    g = w.group
    return frozenset(
        i for i in g.simple_indices if g.bruhat_leq(g.simple_reflection(i), w)
    )


def stable_support(w: WeylElement, delta: DiagramAutomorphism) -> frozenset[int]:
    """Smallest delta-stable set of simple indices containing support(w)."""
    out = set(support(w))
    grew = True
    while grew:
        grew = False
        for i in list(out):
            j = delta(i)
            if j not in out:
                out.add(j)
                grew = True
    return frozenset(out)


@dataclass(frozen=True)
class TwistedOrbit:
    """One W_J-orbit under x . y = d(x) y x^-1, with its minimal elements."""

    members: tuple[WeylElement, ...]
    min_elements: tuple[WeylElement, ...]

    def __contains__(self, w: WeylElement) -> bool:
        return w in self.members


@dataclass(frozen=True)
class TwistClass:
    """The class [w]_J = W_J . (w W_K) of a minimal representative w in W^J."""

    base: WeylElement
    stabilizer_set: frozenset[int]
    members: tuple[WeylElement, ...]


@dataclass(frozen=True)
class Reduction:
    """Result of shifting w down to a distinguished product label * tail."""

    label: WeylElement  # element of W^J
    tail: WeylElement  # element of W_{stabilizer_type(J, label)}
    path: tuple[tuple[int, WeylElement], ...]  # (j, element after the step)

    @property
    def target(self) -> WeylElement:
        return self.label * self.tail


class TwistedConjugation:
    """The twisted conjugation action of parabolic subgroups on a Weyl group.

    Frozen inputs (group table and diagram automorphism) are shared; per-J
    results (orbit partitions, shift digraphs, stabilizer types) are memoized
    on this object, so reuse one instance per (group, delta) pair.
    """

    def __init__(self, group: WeylGroup, delta: DiagramAutomorphism):
        if group.root_system is not delta.root_system:
            raise ValueError("group and automorphism use different root systems")
        self.group = group
        self.delta = delta
        self._delta_cache: list[WeylElement | None] = [None] * group.order
        self._orbit_cache: dict[frozenset[int], tuple[tuple[TwistedOrbit, ...], dict[int, int]]] = {}
        self._stab_cache: dict[tuple[frozenset[int], int], frozenset[int]] = {}
        self._scc_cache: dict[frozenset[int], tuple[tuple[tuple[WeylElement, ...], ...], list[int]]] = {}
        self._strong_cache: dict[frozenset[int], list[int]] = {}
        self._dist_cache: dict[frozenset[int], dict[int, tuple[WeylElement, WeylElement] | None]] = {}

    def delta_apply(self, w: WeylElement) -> WeylElement:
        cached = self._delta_cache[w.index]
        if cached is None:
            cached = delta_on_element(self.delta, w)
            self._delta_cache[w.index] = cached
        return cached

    def twisted_conjugate(self, x: WeylElement, y: WeylElement, J) -> WeylElement:
        """d(x) y x^-1 for x in W_J."""
        if not self.group.in_parabolic(x, J):
            raise ValueError(f"x = {x!r} is not in the parabolic subgroup W_{sorted(J)}")
        return self.delta_apply(x) * y * x.inverse()

    # -- orbits ---------------------------------------------------------------

    def orbit_partition(self, J) -> tuple[tuple[TwistedOrbit, ...], dict[int, int]]:
        """All twisted W_J-orbits (ordered by smallest member) and a lookup."""
        J = frozenset(J)
        cached = self._orbit_cache.get(J)
        if cached is not None:
            return cached
        g = self.group
        gens = [(self.delta_apply(g.simple_reflection(j)), g.simple_reflection(j)) for j in sorted(J)]
        orbit_of: dict[int, int] = {}
        orbits: list[TwistedOrbit] = []
        for e in g.elements:
            if e.index in orbit_of:
                continue
            oid = len(orbits)
            members = [e]
            orbit_of[e.index] = oid
            frontier = [e]
            while frontier:
                nxt = []
                for y in frontier:
                    for ds, s in gens:
                        z = ds * y * s
                        if z.index not in orbit_of:
                            orbit_of[z.index] = oid
                            members.append(z)
                            nxt.append(z)
                frontier = nxt
            members.sort(key=lambda e: e.index)
            low = members[0].length
            mins = tuple(m for m in members if m.length == low)
            orbits.append(TwistedOrbit(tuple(members), mins))
        out = (tuple(orbits), orbit_of)
        self._orbit_cache[J] = out
        return out

    def orbit(self, y: WeylElement, J) -> TwistedOrbit:
        """The twisted W_J-orbit of y."""
        orbits, orbit_of = self.orbit_partition(J)
        return orbits[orbit_of[y.index]]

    def orbit_min(self, y: WeylElement, J) -> tuple[WeylElement, ...]:
        return self.orbit(y, J).min_elements

    # -- stabilizer type -------------------------------------------------------

    def stabilizer_type(self, J, w: WeylElement) -> frozenset[int]:
        """Largest K inside J with w({alpha_k : k in K}) = {alpha_d(k) : k in K}.

        w must be minimal in w W_J; computed as the greatest fixpoint of
        K -> {k in K : w(alpha_k) is a simple root alpha_j with j in d(K)}.
        """
        J = frozenset(J)
        key = (J, w.index)
        cached = self._stab_cache.get(key)
        if cached is not None:
            return cached
        g = self.group
        if not g.is_min_left_rep(w, J):
            raise ValueError(f"w = {w!r} is not a minimal coset representative for J={sorted(J)}")
        rs = g.root_system
        image: dict[int, int | None] = {}
        for k in J:
            r = w.root_image(rs.simple_root_index(k))
            coords = rs.roots[r].coords
            if sum(coords) == 1:  # positive of height 1: a simple root
                image[k] = coords.index(1) + 1
            else:
                image[k] = None
        K = set(J)
        while True:
            target = {self.delta(k) for k in K}
            kept = {k for k in K if image[k] is not None and image[k] in target}
            if kept == K:
                break
            K = kept
        out = frozenset(K)
        self._stab_cache[key] = out
        return out

    # -- class decomposition ---------------------------------------------------

    def class_decomposition(self, J, verify: bool = False) -> tuple[TwistClass, ...]:
        """The classes [w]_J = W_J . (w W_K), one per w in W^J; they tile W."""
        J = frozenset(J)
        g = self.group
        orbits, orbit_of = self.orbit_partition(J)
        out = []
        for w in g.min_coset_reps(J, "right"):
            K = self.stabilizer_type(J, w)
            oids = {orbit_of[(w * v).index] for v in g.parabolic_elements(K)}
            members = []
            for oid in sorted(oids):
                members.extend(orbits[oid].members)
            members.sort(key=lambda e: e.index)
            out.append(TwistClass(w, K, tuple(members)))
        if verify:
            seen: set[int] = set()
            total = 0
            for cls in out:
                idxs = {m.index for m in cls.members}
                if seen & idxs:
                    raise AssertionError("twist classes are not pairwise disjoint")
                seen |= idxs
                total += len(idxs)
            if total != g.order:
                raise AssertionError("twist classes do not cover the group")
        return tuple(out)

    # -- cyclic shift ------------------------------------------------------------

    def shift_step(self, w: WeylElement, j: int, J) -> WeylElement | None:
        """s_d(j) w s_j when its length is <= l(w); None otherwise."""
        if j not in set(J):
            raise ValueError(f"index {j} is not in J={sorted(J)}")
        g = self.group
        z = self.delta_apply(g.simple_reflection(j)) * w * g.simple_reflection(j)
        return z if z.length <= w.length else None

    def _shift_adjacency(self, J) -> list[tuple[int, ...]]:
        g = self.group
        pairs = [(self.delta_apply(g.simple_reflection(j)), g.simple_reflection(j)) for j in sorted(J)]
        adj: list[tuple[int, ...]] = []
        for w in g.elements:
            targets = []
            for ds, s in pairs:
                z = ds * w * s
                if z.length <= w.length:
                    targets.append(z.index)
            adj.append(tuple(sorted(set(targets))))
        return adj

    def shift_reachable(self, w: WeylElement, J) -> tuple[WeylElement, ...]:
        """All w' with w ->_{J,d} w' (reflexive-transitive shift closure)."""
        g = self.group
        adj = self._shift_adjacency(frozenset(J))
        seen = {w.index}
        stack = [w.index]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return tuple(g.elements[i] for i in sorted(seen))

    def shift_classes(self, J) -> tuple[tuple[WeylElement, ...], ...]:
        """Mutual-shift classes: strongly connected components of the digraph."""
        return self._scc(frozenset(J))[0]

    def same_shift_class(self, w: WeylElement, w2: WeylElement, J) -> bool:
        comp = self._scc(frozenset(J))[1]
        return comp[w.index] == comp[w2.index]

    def _scc(self, J: frozenset[int]):
        cached = self._scc_cache.get(J)
        if cached is not None:
            return cached
        adj = self._shift_adjacency(J)
        n = len(adj)
        # iterative Tarjan
        comp = [-1] * n
        low = [0] * n
        num = [-1] * n
        counter = 0
        ncomp = 0
        stack: list[int] = []
        on_stack = [False] * n
        for root in range(n):
            if num[root] != -1:
                continue
            work = [(root, 0)]
            while work:
                u, pi = work[-1]
                if pi == 0:
                    num[u] = low[u] = counter
                    counter += 1
                    stack.append(u)
                    on_stack[u] = True
                recurse = False
                for k in range(pi, len(adj[u])):
                    v = adj[u][k]
                    if num[v] == -1:
                        work[-1] = (u, k + 1)
                        work.append((v, 0))
                        recurse = True
                        break
                    if on_stack[v]:
                        low[u] = min(low[u], num[v])
                if recurse:
                    continue
                if low[u] == num[u]:
                    while True:
                        v = stack.pop()
                        on_stack[v] = False
                        comp[v] = ncomp
                        if v == u:
                            break
                    ncomp += 1
                work.pop()
                if work:
                    p = work[-1][0]
                    low[p] = min(low[p], low[u])
        groups: dict[int, list[int]] = {}
        for idx, c in enumerate(comp):
            groups.setdefault(c, []).append(idx)
        parts = sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])
        relabel = {}
        for newid, part in enumerate(parts):
            for idx in part:
                relabel[idx] = newid
        comp = [relabel[idx] for idx in range(n)]
        elems = self.group.elements
        classes = tuple(tuple(elems[i] for i in part) for part in parts)
        out = (classes, comp)
        self._scc_cache[J] = out
        return out

    # -- strong conjugacy ----------------------------------------------------------

    def _strong_components(self, J: frozenset[int]) -> list[int]:
        cached = self._strong_cache.get(J)
        if cached is not None:
            return cached
        g = self.group
        parent = list(range(g.order))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        def union(i: int, j: int) -> None:
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)

        xs = [(x, self.delta_apply(x), x.inverse()) for x in g.parabolic_elements(J)]
        for w in g.elements:
            for x, dx, xi in xs:
                left = dx * w
                if left.length != x.length + w.length:
                    right = w * xi
                    if right.length != x.length + w.length:
                        continue
                    z = dx * right
                else:
                    z = left * xi
                if z.length == w.length:
                    union(w.index, z.index)
        comp = [find(i) for i in range(g.order)]
        self._strong_cache[J] = comp
        return comp

    def strongly_conjugate(self, w: WeylElement, w2: WeylElement, J) -> bool:
        """Whether w ~ w2: a chain of length-preserving, length-additive twists."""
        comp = self._strong_components(frozenset(J))
        return comp[w.index] == comp[w2.index]

    # -- reduction to distinguished form -----------------------------------------

    def _distinguished_form(self, J: frozenset[int], u: WeylElement):
        """(label, tail) if u = label * tail with label in W^J and tail in W_K."""
        cache = self._dist_cache.setdefault(J, {})
        if u.index in cache:
            return cache[u.index]
        g = self.group
        label = g.min_coset_rep(u, J, "right")
        tail = label.inverse() * u
        out = None
        if set(tail.word) <= self.stabilizer_type(J, label):
            out = (label, tail)
        cache[u.index] = out
        return out

    def reduce_to_distinguished(self, w: WeylElement, J) -> Reduction:
        """Shift w down to some label * tail with the tail in the stabilizer type.

        Breadth-first over shift steps, visiting shorter elements first; the
        returned path lists (j, element reached) for each step taken.
        """
        J = frozenset(J)
        g = self.group
        js = sorted(J)
        gens = {j: (self.delta_apply(g.simple_reflection(j)), g.simple_reflection(j)) for j in js}
        start = w.index
        parents: dict[int, tuple[int, int]] = {}
        seen = {start}
        heap: list[tuple[int, int, int]] = [(w.length, 0, start)]
        counter = 1
        while heap:
            _, _, uidx = heapq.heappop(heap)
            u = g.elements[uidx]
            form = self._distinguished_form(J, u)
            if form is not None:
                label, tail = form
                steps = []
                idx = uidx
                while idx != start:
                    pidx, j = parents[idx]
                    steps.append((j, g.elements[idx]))
                    idx = pidx
                return Reduction(label, tail, tuple(reversed(steps)))
            for j in js:
                ds, s = gens[j]
                z = ds * u * s
                if z.length <= u.length and z.index not in seen:
                    seen.add(z.index)
                    parents[z.index] = (uidx, j)
                    heapq.heappush(heap, (z.length, counter, z.index))
                    counter += 1
        raise RuntimeError(
            "internal error: no distinguished product is shift-reachable from "
            f"{w!r} for J={sorted(J)}; this contradicts a proven property"
        )
