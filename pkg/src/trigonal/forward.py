"""Forward construction: from a tower to its curve of sections.

A section of the in-block double cover over a point of the line picks
one sheet in each of the three blocks, so there are eight of them; the
tower's monodromy acts on these transversals and the resulting
degree-8 cover is the curve of sections.  Exchanging every choice at
once is a fixed-point-free involution; its quotient is a degree-4
(tetragonal) cover, and the parity of the number of exchanged choices
gives a further degree-2 orientation cover.

Transversals are indexed lexicographically: blocks are ordered by
their smallest sheet, each block ascending, and transversal ``t``
corresponds to the bit triple of ``t - 1`` (bit set means the larger
sheet is chosen).  Index 1 is therefore the transversal of all smaller
sheets, and the parity classes of the orientation cover are counted
relative to it; equivariance of that choice is asserted each time an
orientation action is induced.
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass

from .covers import (
    BranchedCover,
    Component,
    CoverPoint,
    NodalCoverModel,
    are_isomorphic,
    arithmetic_genus,
    components,
    genus,
    label_cycles,
)
from .permutation import Permutation, compose, conjugate
from .report import CheckReport, CheckResult
from .towers import ETALE, GENERAL, SPECIAL, BlockSystem, Tower

SECTION_COUNT = 8


@dataclass(frozen=True)
class Transversal:
    """One sheet chosen in each block, listed in block order."""

    sheets: tuple[int, int, int]
    index: int


def transversals(blocks: BlockSystem) -> tuple[Transversal, ...]:
    """All eight transversals in lexicographic order of their sheet triples."""
    out = []
    for t in range(1, SECTION_COUNT + 1):
        bits = _bits(t)
        out.append(Transversal(tuple(blocks[i][bits[i]] for i in range(3)), t))
    return tuple(out)


def _bits(index: int) -> tuple[int, int, int]:
    t = index - 1
    return ((t >> 2) & 1, (t >> 1) & 1, t & 1)


def _index(bits: tuple[int, int, int]) -> int:
    return 1 + bits[0] * 4 + bits[1] * 2 + bits[2]


def _parity(index: int) -> int:
    return bin(index - 1).count("1") & 1


def sections_action(perm: Permutation, blocks: BlockSystem) -> Permutation:
    """The induced permutation of the eight transversals."""
    if perm.degree != 6:
        raise ValueError("sections are defined for degree-6 permutations")
    images = []
    for t in range(1, SECTION_COUNT + 1):
        bits = _bits(t)
        new_bits: list[int | None] = [None, None, None]
        for i in range(3):
            image_sheet = perm(blocks[i][bits[i]])
            j = blocks.block_index(image_sheet) - 1
            if new_bits[j] is not None:
                raise ValueError(f"permutation does not preserve the blocks: {perm}")
            new_bits[j] = blocks[j].index(image_sheet)
        images.append(_index((new_bits[0], new_bits[1], new_bits[2])))  # type: ignore[arg-type]
    return Permutation(tuple(images))


def _involution() -> Permutation:
    # complement every choice: index t maps to 9 - t
    return Permutation(tuple(9 - t for t in range(1, SECTION_COUNT + 1)))


def _class_index(t: int) -> int:
    # involution classes {t, 9 - t}, numbered by their smaller member
    return min(t, 9 - t)


def _quotient_action(sections: Permutation) -> Permutation:
    images = []
    for c in range(1, 5):
        image = _class_index(sections(c))
        if _class_index(sections(9 - c)) != image:
            raise AssertionError("involution classes are not preserved by a section action")
        images.append(image)
    return Permutation(tuple(images))


def _orientation_action(sections: Permutation) -> Permutation:
    # either every parity is preserved or every parity swaps
    swaps = {_parity(t) ^ _parity(sections(t)) for t in range(1, SECTION_COUNT + 1)}
    if len(swaps) != 1:
        raise AssertionError("parity classes are not equivariant under a section action")
    return Permutation((2, 1)) if swaps.pop() else Permutation.identity(2)


@dataclass(frozen=True)
class NodeMarkers:
    """Node data a Special tower imposes on the three derived covers."""

    sections: NodalCoverModel
    quotient: NodalCoverModel
    orientation: NodalCoverModel


@dataclass(frozen=True)
class ForwardResult:
    tower: Tower
    sections: BranchedCover
    involution: Permutation
    quotient: BranchedCover
    orientation: BranchedCover
    to_quotient: tuple[int, ...]
    to_orientation: tuple[int, ...]
    nodes: NodeMarkers | None

    def sections_model(self) -> NodalCoverModel:
        return self.nodes.sections if self.nodes is not None else NodalCoverModel(self.sections)

    def quotient_model(self) -> NodalCoverModel:
        return self.nodes.quotient if self.nodes is not None else NodalCoverModel(self.quotient)


def construct(tower: Tower) -> ForwardResult:
    """Build the sections cover, its involution, and both quotients.

    Labels with trivial induced action are dropped from each derived
    cover (the orientation cover in particular keeps only labels of odd
    flip weight); the sheet maps keep the full correspondence either
    way.  Special towers get their node markers attached.
    """
    involution = _involution()
    section_entries: list[tuple[str, Permutation]] = []
    quotient_entries: list[tuple[str, Permutation]] = []
    orientation_entries: list[tuple[str, Permutation]] = []

    for label, perm in tower.cover.entries():
        action = sections_action(perm, tower.blocks)
        if compose(action, involution) != compose(involution, action):
            raise AssertionError(f"involution fails to commute with the action at {label!r}")
        if not action.is_identity():
            section_entries.append((label, action))
        induced_quotient = _quotient_action(action)
        if not induced_quotient.is_identity():
            quotient_entries.append((label, induced_quotient))
        induced_orientation = _orientation_action(action)
        if not induced_orientation.is_identity():
            orientation_entries.append((label, induced_orientation))

    result = ForwardResult(
        tower=tower,
        sections=BranchedCover.from_pairs(SECTION_COUNT, section_entries),
        involution=involution,
        quotient=BranchedCover.from_pairs(4, quotient_entries),
        orientation=BranchedCover.from_pairs(2, orientation_entries),
        to_quotient=tuple(_class_index(t) for t in range(1, SECTION_COUNT + 1)),
        to_orientation=tuple(_parity(t) + 1 for t in range(1, SECTION_COUNT + 1)),
        nodes=None,
    )
    if tower.mode == SPECIAL:
        result = dataclasses.replace(result, nodes=special_nodes(tower, result))
    return result


def special_nodes(tower: Tower, result: ForwardResult) -> NodeMarkers:
    """Node markers for a Special tower.

    Over the one flip label the sections cover ramifies in four double
    points; the two transversal pairs agreeing on the unflipped block
    are glued, and likewise for the disagreeing two, giving two nodes
    exchanged by the involution.  Ordering follows transversal
    indexing: the node containing transversal 1 comes first.  The
    tetragonal quotient picks up the common image as a single node, and
    the orientation cover's two halves are glued over the same label.
    """
    if tower.mode != SPECIAL:
        raise ValueError(f"special nodes exist only for special towers, mode is {tower.mode!r}")
    label = tower.flips[0].label
    flipped = {p.cycle[0] for p in tower.flips}  # 1-based block indices
    (spare,) = set(range(1, 4)) - flipped
    flip_bits = tuple(1 if i + 1 in flipped else 0 for i in range(3))

    # orbits of the section action at the flip label, keyed by the choice
    # made on the unflipped block
    by_choice: dict[int, list[tuple[int, ...]]] = {0: [], 1: []}
    seen: set[int] = set()
    for t in range(1, SECTION_COUNT + 1):
        if t in seen:
            continue
        bits = _bits(t)
        partner = _index((bits[0] ^ flip_bits[0], bits[1] ^ flip_bits[1], bits[2] ^ flip_bits[2]))
        seen.update({t, partner})
        by_choice[bits[spare - 1]].append(tuple(sorted((t, partner))))

    node_pairs = []
    for choice in (0, 1):
        first, second = sorted(by_choice[choice], key=min)
        node_pairs.append((CoverPoint(label, first), CoverPoint(label, second)))

    quotient_cycles = label_cycles(result.quotient, label)
    if len(quotient_cycles) != 2:
        raise AssertionError("special flip label must leave exactly two quotient points")

    return NodeMarkers(
        sections=NodalCoverModel(result.sections, tuple(node_pairs)),
        quotient=NodalCoverModel(
            result.quotient,
            ((CoverPoint(label, quotient_cycles[0]), CoverPoint(label, quotient_cycles[1])),),
        ),
        orientation=NodalCoverModel(
            result.orientation,
            ((CoverPoint(label, (1,)), CoverPoint(label, (2,))),),
        ),
    )


def component_tetragonal(result: ForwardResult) -> BranchedCover:
    """First component of a split sections cover, as a degree-4 cover.

    Only Etale and Special towers split the sections cover in two; the
    involution is required to carry one component onto the other, and
    that certificate is checked before the component is returned.
    """
    parts = components(result.sections)
    if len(parts) != 2:
        raise ValueError(f"sections cover has {len(parts)} component(s); expected a split into 2")
    first, second = parts
    if first.cover.degree != 4 or second.cover.degree != 4:
        raise ValueError("sections cover does not split into two degree-4 components")
    if sorted(result.involution(s) for s in first.sheets) != list(second.sheets):
        raise AssertionError("involution does not exchange the two components")
    if first.cover.labels != second.cover.labels:
        raise AssertionError("split components are branched over different labels")
    relabel = Permutation(
        tuple(second.from_parent(result.involution(first.to_parent(i))) for i in range(1, 5))
    )
    for pa, pb in zip(first.cover.monodromy, second.cover.monodromy):
        if conjugate(pa, relabel) != pb:
            raise AssertionError("involution fails to intertwine the two components")
    return first.cover


def verify_predictions(tower: Tower, result: ForwardResult) -> CheckReport:
    """Per-mode structural expectations for the derived covers.

    Every failed expectation is reported individually; nothing stops at
    the first failure.
    """
    g = tower.genus
    checks = _shared_checks(result)

    def add(name: str, passed: bool, detail: str = "") -> None:
        checks.append(CheckResult(name, passed, detail))

    top_genus = genus(tower.cover)
    add(
        "prym-dimension-match",
        top_genus - g == (g if tower.flips else g - 1),
        f"double cover genus {top_genus} over base genus {g}",
    )

    parts = components(result.sections)

    if tower.mode == GENERAL:
        add("sections-connected", len(parts) == 1, f"{len(parts)} components")
        if len(parts) == 1:
            gy = genus(result.sections)
            add("sections-genus", gy == 2 * g + 1, f"genus {gy}, expected {2 * g + 1}")
            ram = result.sections.total_ramification()
            add("sections-total-ramification", ram == 4 * g + 16, f"{ram} vs {4 * g + 16}")
            gx = genus(result.quotient)
            add("quotient-genus", gx == g + 1, f"genus {gx}, expected {g + 1}")
            add(
                "prym-of-quotient-match",
                gy - gx == g,
                f"sections genus {gy} minus quotient genus {gx} should be {g}",
            )
            go = genus(result.orientation)
            add(
                "orientation-rational",
                go == 0 and result.orientation.is_connected(),
                f"genus {go}",
            )
            double_double = [
                label
                for label in result.quotient.labels
                if result.quotient.perm_at(label).cycle_type() == (2, 2)
            ]
            others_fixed = all(
                1 in result.quotient.perm_at(label).cycle_type()
                for label in result.quotient.labels
                if label not in double_double
            )
            add(
                "quotient-two-double-double-labels",
                len(double_double) == 2 and others_fixed,
                f"(2,2) at {double_double!r}",
            )
    elif tower.mode == SPECIAL:
        checks.extend(_split_checks(result, parts, expected_genus=g, expected_ram=2 * g + 6))
        nodes = result.nodes
        if nodes is None:
            add("node-markers-attached", False, "special tower without node markers")
        else:
            add("node-count", len(nodes.sections.nodes) == 2, f"{len(nodes.sections.nodes)} nodes")
            swapped = False
            if len(nodes.sections.nodes) == 2:
                first, second = nodes.sections.nodes
                swapped = frozenset(p.mapped(result.involution) for p in first) == frozenset(second)
            add("nodes-swapped-by-involution", swapped)
            pa_sections = arithmetic_genus(nodes.sections)
            add("sections-arithmetic-genus", pa_sections == 2 * g + 1, f"{pa_sections} vs {2 * g + 1}")
            pa_quotient = arithmetic_genus(nodes.quotient)
            add("quotient-arithmetic-genus", pa_quotient == g + 1, f"{pa_quotient} vs {g + 1}")
            crosswise = len(parts) == 2 and all(
                {_component_of(parts, p.cycle[0]) for p in pair} == {0, 1}
                for pair in nodes.sections.nodes
            )
            free = all(result.involution(t) != t for t in range(1, SECTION_COUNT + 1))
            add(
                "wirtinger-gluing",
                crosswise and swapped and free,
                "two copies glued crosswise at two points exchanged by a free involution",
            )
            pa_orientation = arithmetic_genus(nodes.orientation)
            add("orientation-arithmetic-genus", pa_orientation == 0, f"{pa_orientation}")
        add("orientation-unbranched", not result.orientation.labels)
    elif tower.mode == ETALE:
        checks.extend(_split_checks(result, parts, expected_genus=g - 1, expected_ram=2 * g + 4))
        add("orientation-unbranched", not result.orientation.labels)
    else:
        add("known-mode", False, f"unrecognized mode {tower.mode!r}")

    return CheckReport(f"forward-predictions[{tower.mode}, g={g}]", tuple(checks))


def _shared_checks(result: ForwardResult) -> list[CheckResult]:
    tower = result.tower
    checks: list[CheckResult] = []

    freeness = []
    for label in result.sections.labels:
        up = len(label_cycles(result.sections, label))
        down = len(label_cycles(result.quotient, label))
        if up != 2 * down:
            freeness.append(f"{label}: {up} vs {down}")
    checks.append(
        CheckResult(
            "involution-free-criterion",
            not freeness,
            "; ".join(freeness) or "section cycles double the quotient cycles at every label",
        )
    )
    checks.append(
        CheckResult(
            "involution-fixed-point-free",
            all(result.involution(t) != t for t in range(1, SECTION_COUNT + 1)),
        )
    )

    diagram = []
    for label in tower.cover.labels:
        action = result.sections.perm_at(label)
        induced_quotient = result.quotient.perm_at(label)
        induced_orientation = result.orientation.perm_at(label)
        for t in range(1, SECTION_COUNT + 1):
            if result.to_quotient[action(t) - 1] != induced_quotient(result.to_quotient[t - 1]):
                diagram.append(f"quotient square breaks at {label}/{t}")
            if result.to_orientation[action(t) - 1] != induced_orientation(
                result.to_orientation[t - 1]
            ):
                diagram.append(f"orientation square breaks at {label}/{t}")
    checks.append(CheckResult("diagram-commutes", not diagram, "; ".join(diagram[:4])))

    odd_weight = {
        label
        for label in tower.flip_labels()
        if sum(1 for p in tower.flips if p.label == label) % 2 == 1
    }
    checks.append(
        CheckResult(
            "orientation-branching",
            set(result.orientation.labels) == odd_weight,
            f"branched over {sorted(result.orientation.labels)!r}, odd flip weight at {sorted(odd_weight)!r}",
        )
    )
    return checks


def _component_of(parts: tuple[Component, ...], parent_sheet: int) -> int:
    for i, part in enumerate(parts):
        if parent_sheet in part.sheets:
            return i
    raise ValueError(f"sheet {parent_sheet} in no component")


def _split_checks(
    result: ForwardResult, parts: tuple[Component, ...], expected_genus: int, expected_ram: int
) -> list[CheckResult]:
    checks = [CheckResult("sections-split-in-two", len(parts) == 2, f"{len(parts)} components")]
    if len(parts) != 2:
        return checks
    genera = [genus(p.cover) for p in parts]
    rams = [p.cover.total_ramification() for p in parts]
    checks.append(
        CheckResult(
            "component-genus",
            genera == [expected_genus, expected_genus],
            f"component genera {genera}, expected {expected_genus}",
        )
    )
    checks.append(
        CheckResult(
            "component-total-ramification",
            rams == [expected_ram, expected_ram],
            f"{rams} vs {expected_ram}",
        )
    )
    checks.append(
        CheckResult(
            "components-swapped-by-involution",
            sorted(result.involution(s) for s in parts[0].sheets) == list(parts[1].sheets),
        )
    )
    try:
        iso = are_isomorphic(parts[0].cover, parts[1].cover)
        checks.append(CheckResult("components-isomorphic", iso is not None))
    except ValueError as err:
        checks.append(CheckResult("components-isomorphic", False, str(err)))
    return checks
