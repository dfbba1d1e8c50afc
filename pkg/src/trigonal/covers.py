"""Branched covers of the line as monodromy data.

A cover of degree ``n`` branched over finitely many labelled points is
recorded as one permutation of the sheets ``1..n`` per branch label.
Labels are opaque strings; their order is part of the data, and the
ordered product of the monodromy entries (leftmost applied first) must
be the identity.  Entries equal to the identity are forbidden: a label
whose monodromy would be trivial is simply not a branch label.

Nodal curves are modelled by a smooth cover (the normalization) plus
side-band node markers: unordered pairs of fibre points that are glued.
Nodes are never encoded into the permutations themselves.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .permutation import Permutation, compose, orbits, product


@dataclass(frozen=True)
class BranchedCover:
    degree: int
    labels: tuple[str, ...]
    monodromy: tuple[Permutation, ...]

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError("cover degree must be a positive integer")
        if len(self.labels) != len(self.monodromy):
            raise ValueError("labels and monodromy entries must correspond one to one")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"branch labels must be distinct: {self.labels!r}")
        for label, perm in zip(self.labels, self.monodromy):
            if perm.degree != self.degree:
                raise ValueError(
                    f"monodromy at {label!r} has degree {perm.degree}, cover has degree {self.degree}"
                )
            if perm.is_identity():
                raise ValueError(f"identity monodromy at {label!r} is forbidden; drop the label")
        if self.monodromy and not product(self.monodromy).is_identity():
            raise ValueError("ordered product of monodromy entries is not the identity")

    @classmethod
    def from_pairs(cls, degree: int, entries: Iterable[tuple[str, Permutation]]) -> "BranchedCover":
        pairs = tuple(entries)
        return cls(degree, tuple(l for l, _ in pairs), tuple(p for _, p in pairs))

    def perm_at(self, label: str) -> Permutation:
        """Monodromy at ``label``; identity if the label is not a branch label."""
        try:
            return self.monodromy[self.labels.index(label)]
        except ValueError:
            return Permutation.identity(self.degree)

    def entries(self) -> tuple[tuple[str, Permutation], ...]:
        return tuple(zip(self.labels, self.monodromy))

    def total_ramification(self) -> int:
        return sum(self.degree - len(p.cycles(include_fixed=True)) for p in self.monodromy)

    def is_connected(self) -> bool:
        return len(orbits(self.monodromy, self.degree)) == 1


@dataclass(frozen=True)
class CoverPoint:
    """A point of a cover lying over a branch label.

    Fibre points over a label correspond to cycles of the monodromy
    there; the cycle is stored rotated to start at its smallest sheet.
    A label the cover is not branched over is allowed: its fibre points
    are the singleton cycles of the implicit identity.
    """

    label: str
    cycle: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.cycle:
            raise ValueError("a cover point needs a non-empty cycle")
        if len(set(self.cycle)) != len(self.cycle):
            raise ValueError(f"repeated sheet in cycle {self.cycle!r}")
        pivot = self.cycle.index(min(self.cycle))
        object.__setattr__(self, "cycle", tuple(self.cycle[pivot:]) + tuple(self.cycle[:pivot]))

    @property
    def ramification_index(self) -> int:
        return len(self.cycle)

    def mapped(self, rho: Permutation) -> "CoverPoint":
        return CoverPoint(self.label, tuple(rho(s) for s in self.cycle))


def label_cycles(cover: BranchedCover, label: str) -> tuple[tuple[int, ...], ...]:
    """All cycles over ``label`` including fixed sheets, ordered by smallest
    sheet.  For a label the cover is not branched over this is the full
    list of singletons."""
    return cover.perm_at(label).cycles(include_fixed=True)


def fiber_points(cover: BranchedCover, label: str) -> tuple[CoverPoint, ...]:
    return tuple(CoverPoint(label, c) for c in label_cycles(cover, label))


def point_on(cover: BranchedCover, label: str, cycle: Sequence[int]) -> CoverPoint:
    """Validated constructor: the cycle must actually be a fibre point of
    ``cover`` over ``label``."""
    point = CoverPoint(label, tuple(cycle))
    if point.cycle not in label_cycles(cover, label):
        raise ValueError(f"{point.cycle!r} is not a cycle over {label!r}")
    return point


def ramification_profile(cover: BranchedCover, label: str) -> tuple[int, ...]:
    """Cycle lengths over ``label`` including fixed sheets, longest first."""
    return cover.perm_at(label).cycle_type()


def genus(cover: BranchedCover) -> int:
    """Genus of a connected smooth cover, by Riemann-Hurwitz over the line."""
    if not cover.is_connected():
        raise ValueError("genus of a disconnected cover is undefined; split into components")
    ram = cover.total_ramification()
    if ram % 2 != 0:
        raise ValueError(f"odd total ramification degree {ram}: corrupted monodromy data")
    return 1 - cover.degree + ram // 2


@dataclass(frozen=True)
class Component:
    """A connected component of a cover.

    ``sheets[i]`` is the parent sheet behind sheet ``i + 1`` of the
    component cover; labels whose restricted monodromy is trivial are
    dropped.
    """

    cover: BranchedCover
    sheets: tuple[int, ...]

    def to_parent(self, sheet: int) -> int:
        return self.sheets[sheet - 1]

    def from_parent(self, parent_sheet: int) -> int:
        return self.sheets.index(parent_sheet) + 1


def components(cover: BranchedCover) -> tuple[Component, ...]:
    """Connected components, ordered by their smallest parent sheet."""
    out = []
    for orbit in orbits(cover.monodromy, cover.degree):
        index = {sheet: i + 1 for i, sheet in enumerate(orbit)}
        entries = []
        for label, perm in cover.entries():
            restricted = Permutation(tuple(index[perm(s)] for s in orbit))
            if not restricted.is_identity():
                entries.append((label, restricted))
        out.append(Component(BranchedCover.from_pairs(len(orbit), entries), orbit))
    return tuple(out)


@dataclass(frozen=True)
class NodalCoverModel:
    """A nodal curve: smooth normalization plus node markers.

    Each node is an unordered pair of distinct fibre points over one
    common branch label; a fibre point belongs to at most one node.
    """

    normalization: BranchedCover
    nodes: tuple[tuple[CoverPoint, CoverPoint], ...] = ()

    def __post_init__(self) -> None:
        seen: set[CoverPoint] = set()
        for a, b in self.nodes:
            if a.label != b.label:
                raise ValueError(f"node endpoints over different labels: {a.label!r}, {b.label!r}")
            if a == b:
                raise ValueError(f"node glues a point to itself: {a!r}")
            for p in (a, b):
                if p.cycle not in label_cycles(self.normalization, p.label):
                    raise ValueError(f"{p!r} is not a fibre point of the normalization")
                if p in seen:
                    raise ValueError(f"{p!r} appears in two nodes")
                seen.add(p)

    def node_set(self) -> frozenset[frozenset[CoverPoint]]:
        return frozenset(frozenset(pair) for pair in self.nodes)


def arithmetic_genus(model: NodalCoverModel) -> int:
    """Arithmetic genus of the glued curve: component genera plus nodes
    minus components plus one."""
    parts = components(model.normalization)
    return sum(genus(c.cover) for c in parts) + len(model.nodes) - len(parts) + 1


def iter_isomorphisms(first: BranchedCover, second: BranchedCover) -> Iterator[Permutation]:
    """All sheet relabelings ``rho`` with ``conjugate(m, rho)`` matching the
    second cover's monodromy entry by entry.

    Covers must share degree and the identical ordered label list; a
    mismatch there is a usage error, not a negative answer.
    """
    if first.degree != second.degree:
        raise ValueError(f"degree mismatch: {first.degree} vs {second.degree}")
    if first.labels != second.labels:
        raise ValueError(f"branch labels differ: {first.labels!r} vs {second.labels!r}")

    n = first.degree
    pairs = list(zip(first.monodromy, second.monodromy))

    def extend(mapping: dict[int, int], used: set[int]) -> Iterator[dict[int, int]]:
        if len(mapping) == n:
            yield mapping
            return
        start = min(s for s in range(1, n + 1) if s not in mapping)
        for target in range(1, n + 1):
            if target in used:
                continue
            trial = dict(mapping)
            trial_used = set(used)
            trial[start] = target
            trial_used.add(target)
            queue = [start]
            ok = True
            while queue and ok:
                x = queue.pop()
                for sigma, sigma2 in pairs:
                    want = sigma2(trial[x])
                    got = trial.get(sigma(x))
                    if got is None:
                        if want in trial_used:
                            ok = False
                            break
                        trial[sigma(x)] = want
                        trial_used.add(want)
                        queue.append(sigma(x))
                    elif got != want:
                        ok = False
                        break
            if ok:
                yield from extend(trial, trial_used)

    for mapping in extend({}, set()):
        yield Permutation(tuple(mapping[i] for i in range(1, n + 1)))


def are_isomorphic(first: BranchedCover, second: BranchedCover) -> Permutation | None:
    """A conjugating relabeling if one exists, else ``None``."""
    return next(iter_isomorphisms(first, second), None)


def nodal_isomorphism(first: NodalCoverModel, second: NodalCoverModel) -> Permutation | None:
    """An isomorphism of normalizations carrying the node markers of the
    first model onto those of the second, if one exists."""
    want = second.node_set()
    for rho in iter_isomorphisms(first.normalization, second.normalization):
        image = frozenset(frozenset(p.mapped(rho) for p in pair) for pair in first.nodes)
        if image == want:
            return rho
    return None
