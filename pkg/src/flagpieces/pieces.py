"""Pieces of a partial flag variety: labels, stabilizing sequences, closures.

For a subset J of simple indices and a diagram automorphism, the pieces are
labeled by the minimal right-coset representatives ^JW. Each label carries a
stabilizing sequence (J_n, w_n), a stabilizer type, the minimal elements of
its twisted orbit, an irreducibility flag, and a position in the closure
poset given by the twisted partial order on minimal representatives.
"""

from __future__ import annotations

from dataclasses import dataclass

from .twist import TwistedConjugation, stable_support
from .weyl import WeylElement, WeylGroup


class SequenceError(ValueError):
    """A stabilizing sequence violates one of its defining conditions."""


class CriterionNotApplicable(ValueError):
    """The irreducibility criterion does not apply (J = I)."""


def simple_image_subset(w: WeylElement, subset) -> frozenset[int]:
    """{j : w(alpha_k) = alpha_j for some k in subset}; non-simple images dropped."""
    rs = w.group.root_system
    out = set()
    for k in subset:
        r = w.root_image(rs.simple_root_index(k))
        if rs.is_positive_index(r):
            coords = rs.roots[r].coords
            if sum(coords) == 1:
                out.add(coords.index(1) + 1)
    return frozenset(out)


@dataclass(frozen=True)
class TwistedSequence:
    """The stabilizing sequence (J_n, w_n), stored up to its first stable pair."""

    steps: tuple[tuple[frozenset[int], WeylElement], ...]
    stable_J: frozenset[int]
    stable_w: WeylElement

    def subset_at(self, n: int) -> frozenset[int]:
        """J_n, extended constantly beyond the stabilization point."""
        return self.steps[min(n, len(self.steps) - 1)][0]


def validate_sequence(tc: TwistedConjugation, seq: TwistedSequence) -> None:
    """Check the four defining conditions and stabilization; raise on failure."""
    g, delta = tc.group, tc.delta
    steps = seq.steps
    if not steps:
        raise SequenceError("sequence has no steps")
    for n, (Jn, wn) in enumerate(steps):
        dJn = delta.subset(Jn)
        if not (g.is_min_right_rep(wn, Jn) and g.is_min_left_rep(wn, dJn)):
            raise SequenceError(
                f"condition (c) fails at step {n}: w_{n} is not a minimal "
                f"double coset representative"
            )
        if n == 0:
            continue
        Jp, wp = steps[n - 1]
        if Jn != Jp & simple_image_subset(wp, delta.subset(Jp)):
            raise SequenceError(f"condition (b) fails at step {n}")
        if not Jn < Jp:
            raise SequenceError(f"J_{n} does not strictly shrink before stabilization")
        dJp = delta.subset(Jp)
        if g.double_coset_rep(wn, Jn, dJp) != g.double_coset_rep(wp, Jn, dJp):
            raise SequenceError(
                f"condition (d) fails at step {n}: w_{n} is not in "
                f"W_J_{n} w_{n-1} W_d(J_{n-1})"
            )
    Jm, wm = steps[-1]
    if Jm != Jm & simple_image_subset(wm, delta.subset(Jm)):
        raise SequenceError("final step is not stabilized")
    if (seq.stable_J, seq.stable_w) != (Jm, wm):
        raise SequenceError("stable pair does not match the final step")


def sequence_for(tc: TwistedConjugation, J, w: WeylElement) -> TwistedSequence:
    """Stabilizing sequence of the piece labeled by w^-1, for w in W^J.

    Iterates J_0 = J, w_n = min(w^-1 W_{d(J_n)}),
    J_{n+1} = J_n intersect Ad(w_n) d(J_n) until the pair repeats.
    """
    g, delta = tc.group, tc.delta
    J = frozenset(J)
    if not g.is_min_left_rep(w, J):
        raise ValueError(f"w = {w!r} is not a minimal coset representative for J={sorted(J)}")
    winv = w.inverse()
    steps: list[tuple[frozenset[int], WeylElement]] = []
    Jn = J
    for _ in range(len(J) + 2):
        wn = g.min_coset_rep(winv, delta.subset(Jn), "right")
        if steps and steps[-1] == (Jn, wn):
            break
        steps.append((Jn, wn))
        Jn = Jn & simple_image_subset(wn, delta.subset(Jn))
    else:
        raise RuntimeError(
            f"internal error: sequence for {w!r}, J={sorted(J)} did not stabilize "
            f"within {len(J) + 1} steps"
        )
    seq = TwistedSequence(tuple(steps), steps[-1][0], steps[-1][1])
    if seq.stable_w != winv:
        raise RuntimeError(
            f"internal error: stable w of the sequence for {w!r} is not w^-1"
        )
    if seq.stable_J != tc.stabilizer_type(J, w):
        raise RuntimeError(
            f"internal error: stable J of the sequence for {w!r} is not the "
            f"stabilizer type"
        )
    validate_sequence(tc, seq)
    return seq


def sequence_to_label(tc: TwistedConjugation, seq: TwistedSequence) -> WeylElement:
    """The element of W^J corresponding to a valid sequence: inverse(stable_w)."""
    validate_sequence(tc, seq)
    return seq.stable_w.inverse()


def twisted_leq(
    tc: TwistedConjugation, J, w: WeylElement, w2: WeylElement, verify: bool = False
) -> bool:
    """The twisted partial order on W^J, extended to arbitrary right arguments.

    For w2 in W^J: true iff for some (equivalently any) v' minimal in the
    twisted orbit of w2 there is a v minimal in the orbit of w with v <= v'.
    For general w2: true iff some such v satisfies v <= w2 directly. With
    verify=True the independence from the choice of v' is asserted.
    """
    g = tc.group
    J = frozenset(J)
    if not g.is_min_left_rep(w, J):
        raise ValueError(f"w = {w!r} is not a minimal coset representative for J={sorted(J)}")
    mins_w = tc.orbit_min(w, J)
    if g.is_min_left_rep(w2, J):
        mins_w2 = tc.orbit_min(w2, J)
        results = [
            any(g.bruhat_leq(v, vp) for v in mins_w)
            for vp in (mins_w2 if verify else mins_w2[:1])
        ]
        if verify and any(results) != all(results):
            raise AssertionError(
                f"twisted order not independent of the representative for "
                f"w={w!r}, w2={w2!r}, J={sorted(J)}"
            )
        return results[0]
    return any(g.bruhat_leq(v, w2) for v in mins_w)


@dataclass(frozen=True)
class PieceRecord:
    """Per-piece metadata: the ^JW label and everything derived from it."""

    index_w: WeylElement  # the piece label, in ^JW
    inv_w: WeylElement  # its inverse, in W^J
    stabilizer_set: frozenset[int]
    orbit_min: tuple[WeylElement, ...]
    irreducible: bool | None  # None when J = I (criterion not applicable)


@dataclass(frozen=True)
class ClosurePoset:
    """The closure partial order on the pieces for one subset J."""

    J: frozenset[int]
    records: tuple[PieceRecord, ...]
    leq_rows: tuple[int, ...]  # row a: bitmask of {b : a below-or-equal b}
    hasse_edges: tuple[tuple[int, int], ...]  # covering pairs (lower, upper)

    def leq(self, a: int, b: int) -> bool:
        return (self.leq_rows[a] >> b) & 1 == 1

    @property
    def nodes(self) -> tuple[PieceRecord, ...]:
        return self.records


def piece_records(tc: TwistedConjugation, J) -> tuple[PieceRecord, ...]:
    """One record per element of ^JW, in the deterministic group order."""
    g, delta = tc.group, tc.delta
    J = frozenset(J)
    full = frozenset(g.simple_indices)
    out = []
    for b in g.min_coset_reps(J, "left"):
        inv = b.inverse()
        irr = None if J == full else (stable_support(b, delta) == full)
        out.append(
            PieceRecord(
                index_w=b,
                inv_w=inv,
                stabilizer_set=tc.stabilizer_type(J, inv),
                orbit_min=tc.orbit_min(inv, J),
                irreducible=irr,
            )
        )
    return tuple(out)


def closure_poset(tc: TwistedConjugation, J, verify: bool = False) -> ClosurePoset:
    """Closure order on pieces: a below b iff a^-1 twisted-below b^-1."""
    g = tc.group
    J = frozenset(J)
    records = piece_records(tc, J)
    n = len(records)
    mins = [rec.orbit_min for rec in records]
    rows = []
    for ia in range(n):
        mask = 0
        for ib in range(n):
            vps = mins[ib] if verify else mins[ib][:1]
            results = [any(g.bruhat_leq(v, vp) for v in mins[ia]) for vp in vps]
            if verify and any(results) != all(results):
                raise AssertionError(
                    f"twisted order not independent of the representative at "
                    f"nodes {ia}, {ib} for J={sorted(J)}"
                )
            if results[0]:
                mask |= 1 << ib
        rows.append(mask)
    if verify:
        _check_partial_order(rows)
    cols = [0] * n
    for a in range(n):
        row = rows[a]
        for b in range(n):
            if (row >> b) & 1:
                cols[b] |= 1 << a
    hasse = []
    for a in range(n):
        above = rows[a] & ~(1 << a)
        for b in range(n):
            if (above >> b) & 1:
                between = above & cols[b] & ~(1 << b)
                if between == 0:
                    hasse.append((a, b))
    return ClosurePoset(J, records, tuple(rows), tuple(sorted(hasse)))


def _check_partial_order(rows: list[int]) -> None:
    n = len(rows)
    for a in range(n):
        if not (rows[a] >> a) & 1:
            raise AssertionError(f"closure relation is not reflexive at node {a}")
        for b in range(n):
            if a != b and (rows[a] >> b) & 1 and (rows[b] >> a) & 1:
                raise AssertionError(f"closure relation is not antisymmetric at {a}, {b}")
            if (rows[a] >> b) & 1 and (rows[b] | rows[a]) != rows[a]:
                raise AssertionError(f"closure relation is not transitive at {a}, {b}")


def piece_closure(tc: TwistedConjugation, J, w: WeylElement) -> tuple[WeylElement, ...]:
    """Labels of the pieces inside the closure of the stratum attached to w."""
    g = tc.group
    J = frozenset(J)
    winv = w.inverse()
    return tuple(
        b
        for b in g.min_coset_reps(J, "left")
        if twisted_leq(tc, J, b.inverse(), winv)
    )


def is_irreducible(tc: TwistedConjugation, J, w: WeylElement) -> bool:
    """Whether the piece labeled by w (in ^JW) is irreducible.

    True iff the smallest delta-stable set of simple indices containing the
    support of w is everything. Requires J != I.
    """
    g = tc.group
    J = frozenset(J)
    full = frozenset(g.simple_indices)
    if J == full:
        raise CriterionNotApplicable("irreducibility criterion requires J != I")
    if not g.is_min_right_rep(w, J):
        raise ValueError(f"w = {w!r} is not in ^JW for J={sorted(J)}")
    return stable_support(w, tc.delta) == full


def parabolic_restriction_type(
    group: WeylGroup, J, K, w: WeylElement, verify: bool = False
) -> frozenset[int]:
    """The type J1 = J intersect Ad(w1)K with w1 = min(w W_K), for w in ^JW.

    With verify=True the root-level identity Phi_J1 = Phi_J intersect w1(Phi_K)
    is asserted.
    """
    J, K = frozenset(J), frozenset(K)
    if not group.is_min_right_rep(w, J):
        raise ValueError(f"w = {w!r} is not in ^JW for J={sorted(J)}")
    w1 = group.min_coset_rep(w, K, "right")
    J1 = J & simple_image_subset(w1, K)
    if verify:
        rs = group.root_system
        phi_j1 = rs.parabolic_root_indices(J1)
        phi_j = rs.parabolic_root_indices(J)
        image = frozenset(w1.root_image(r) for r in rs.parabolic_root_indices(K))
        if phi_j1 != phi_j & image:
            raise AssertionError(
                f"Levi root identity fails for J={sorted(J)}, K={sorted(K)}, w={w!r}"
            )
    return J1


@dataclass(frozen=True)
class RootInclusionReport:
    """Outcome of the layerwise root-inclusion checks along a sequence."""

    w: WeylElement
    J: frozenset[int]
    checked: int
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def sequence_root_inclusions(tc: TwistedConjugation, J, w: WeylElement) -> RootInclusionReport:
    """Verify, at root level, how w transports the layers of its sequence.

    With (J_n) the subsets of the stabilizing sequence of w in W^J:
      (1) w(Phi+_J minus Phi_{J_1}) avoids Phi_{d(J)} (stays positive);
      (2) w(Phi+_{J_i} minus Phi_{J_{i+1}}) lands in
          Phi+_{d(J_{i-1})} minus Phi_{d(J_i)} for i >= 1.
    """
    g, delta = tc.group, tc.delta
    rs = g.root_system
    J = frozenset(J)
    seq = sequence_for(tc, J, w)
    n_steps = len(seq.steps)
    checked = 0
    failures: list[str] = []

    def phi(subset, positive_only=True):
        return rs.parabolic_root_indices(subset, positive_only=positive_only)

    def phi_all(subset):
        return rs.parabolic_root_indices(subset)

    # (1): layer 0 into the unipotent part across delta(J)
    J1 = seq.subset_at(1)
    target = frozenset(range(rs.n_positive)) - phi_all(delta.subset(J))
    for r in phi(J) - phi_all(J1):
        checked += 1
        img = w.root_image(r)
        if img not in target:
            failures.append(
                f"layer 0: w({rs.roots[r].coords}) = {rs.roots[img].coords} "
                f"is not in Phi+ minus Phi_d(J)"
            )
    # (2): layer i into the delta-image of the previous Levi, off the next one
    for i in range(1, n_steps):
        Ji, Ji1 = seq.subset_at(i), seq.subset_at(i + 1)
        target = phi(delta.subset(seq.subset_at(i - 1))) - phi_all(delta.subset(Ji))
        for r in phi(Ji) - phi_all(Ji1):
            checked += 1
            img = w.root_image(r)
            if img not in target:
                failures.append(
                    f"layer {i}: w({rs.roots[r].coords}) = {rs.roots[img].coords} "
                    f"is not in Phi+_d(J_{i-1}) minus Phi_d(J_{i})"
                )
    return RootInclusionReport(w, J, checked, tuple(failures))
