"""Inverse construction: from a tetragonal cover back to a tower.

The six unordered pairs of the four sheets carry an induced action,
and complementation of pairs is a fixed-point-free involution
commuting with it; its three orbits are the pair partitions
``{12|34}``, ``{13|24}``, ``{14|23}``, which underlie a degree-3
cover.  Pairs are indexed lexicographically and partitions by the
partner of sheet 1, so the complement swaps pair indices 1/6, 2/5,
3/4 and the partitions are the blocks (1,6), (2,5), (3,4).

A fibre of the tetragonal cover is classified by its cycle type:

  1. unbranched            - never stored, identity entries are dropped
  2. one transposition     - simple ramification downstairs and upstairs
  3. one 3-cycle           - one point of multiplicity three on each level
  4. two transpositions    - the degree-3 curve acquires a node plus a
                             smooth point; the two partitions whose pair
                             preimages fuse into single 2-cycles are
                             glued, and their preimage points upstairs
                             are glued as well
  5. one 4-cycle           - a node with exactly one ramified branch:
                             the length-2 partition point is glued to
                             the fixed partition carrying a 2-cycle of
                             pairs, with the matching gluing upstairs

Node markers stay side-band data on the normalizations, which is what
lets the smooth machinery keep running underneath.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping

from .covers import (
    BranchedCover,
    CoverPoint,
    NodalCoverModel,
    are_isomorphic,
    arithmetic_genus,
    components,
    genus as cover_genus,
    iter_isomorphisms,
    nodal_isomorphism,
)
from .forward import component_tetragonal, construct
from .permutation import Permutation, compose
from .report import CheckReport, CheckResult
from .towers import (
    ETALE,
    SPECIAL,
    BlockSystem,
    Tower,
    TowerValidationError,
    block_action,
    validate_tower,
)

PAIRS: tuple[tuple[int, int], ...] = tuple(combinations(range(1, 5), 2))
PAIR_INDEX: dict[tuple[int, int], int] = {pair: i + 1 for i, pair in enumerate(PAIRS)}
PARTITION_BLOCKS = BlockSystem.from_pairs([(1, 6), (2, 5), (3, 4)])

STRATUM_M0 = "m0"
STRATUM_M1 = "m1"
STRATUM_M2 = "m2"
STRATUM_OTHER = "other"

FIBER_SIMPLE = 2
FIBER_TRIPLE = 3
FIBER_DOUBLE_DOUBLE = 4
FIBER_QUADRUPLE = 5

_TYPE_BY_CYCLES = {
    (1, 1, 1, 1): 1,
    (2, 1, 1): FIBER_SIMPLE,
    (3, 1): FIBER_TRIPLE,
    (2, 2): FIBER_DOUBLE_DOUBLE,
    (4,): FIBER_QUADRUPLE,
}


def pairs_action(perm: Permutation) -> Permutation:
    """Induced permutation of the six unordered sheet pairs."""
    if perm.degree != 4:
        raise ValueError("pairs are formed from degree-4 permutations")
    images = []
    for a, b in PAIRS:
        images.append(PAIR_INDEX[tuple(sorted((perm(a), perm(b))))])
    return Permutation(tuple(images))


def complement_involution() -> Permutation:
    """Pair complementation, as a permutation of pair indices."""
    return Permutation(tuple(PAIR_INDEX[tuple(sorted(set(range(1, 5)) - set(p)))] for p in PAIRS))


def partition_action(perm: Permutation) -> Permutation:
    """Induced permutation of the three pair partitions."""
    return block_action(pairs_action(perm), PARTITION_BLOCKS)


def classify_fiber(perm: Permutation) -> int:
    """Fibre type 1-5 of a degree-4 monodromy entry by cycle type."""
    if perm.degree != 4:
        raise ValueError("fibre types are defined for degree-4 permutations")
    return _TYPE_BY_CYCLES[perm.cycle_type()]


@dataclass(frozen=True)
class TetragonalCover:
    """A connected degree-4 cover together with its stratum.

    The stratum counts labels of type (2,2): none is ``m0``, one is
    ``m1``, two is ``m2``, anything else (or any 4-cycle label) is
    ``other``.
    """

    cover: BranchedCover
    stratum: str = field(init=False)

    def __post_init__(self) -> None:
        if self.cover.degree != 4:
            raise ValueError(f"tetragonal cover must have degree 4, got {self.cover.degree}")
        if not self.cover.is_connected():
            raise ValueError("tetragonal cover must be connected")
        object.__setattr__(self, "stratum", _stratum(self.cover))

    @property
    def genus(self) -> int:
        return cover_genus(self.cover)

    def fiber_types(self) -> dict[str, int]:
        return {label: classify_fiber(p) for label, p in self.cover.entries()}


def _stratum(cover: BranchedCover) -> str:
    types = [classify_fiber(p) for p in cover.monodromy]
    doubles = types.count(FIBER_DOUBLE_DOUBLE)
    if FIBER_QUADRUPLE in types:
        return STRATUM_OTHER
    if doubles <= 2:
        return (STRATUM_M0, STRATUM_M1, STRATUM_M2)[doubles]
    return STRATUM_OTHER


@dataclass(frozen=True)
class InverseResult:
    source: TetragonalCover
    pairs_cover: BranchedCover
    complement: Permutation
    blocks: BlockSystem
    trigonal_cover: BranchedCover
    fiber_types: Mapping[str, int]
    trigonal_model: NodalCoverModel
    pairs_model: NodalCoverModel


def invert(tetragonal: TetragonalCover) -> InverseResult:
    """Pairs cover, partition cover and the node markers they carry.

    Every connected degree-4 cover is accepted; degenerate fibres only
    show up as node markers, never as changed permutations.
    """
    source = tetragonal.cover
    kappa = complement_involution()

    pair_entries: list[tuple[str, Permutation]] = []
    partition_entries: list[tuple[str, Permutation]] = []
    for label, perm in source.entries():
        induced = pairs_action(perm)
        if compose(induced, kappa) != compose(kappa, induced):
            raise AssertionError(f"complement fails to commute with the pair action at {label!r}")
        pair_entries.append((label, induced))  # pair action is faithful, never identity here
        induced_partition = block_action(induced, PARTITION_BLOCKS)
        if not induced_partition.is_identity():
            partition_entries.append((label, induced_partition))

    pairs_cover = BranchedCover.from_pairs(6, pair_entries)
    trigonal_cover = BranchedCover.from_pairs(3, partition_entries)

    trigonal_nodes: list[tuple[CoverPoint, CoverPoint]] = []
    pairs_nodes: list[tuple[CoverPoint, CoverPoint]] = []
    types: dict[str, int] = {}
    for label, perm in source.entries():
        fiber = classify_fiber(perm)
        types[label] = fiber
        induced = pairs_cover.perm_at(label)
        if fiber == FIBER_DOUBLE_DOUBLE:
            # partitions whose two pairs fuse into a single 2-cycle glue
            glued = [q for q in range(1, 4) if len(induced.cycle_through(PARTITION_BLOCKS[q - 1][0])) == 2]
            if len(glued) != 2:
                raise AssertionError(f"type 4 fibre at {label!r} without two fused partitions")
            trigonal_nodes.append(
                (CoverPoint(label, (glued[0],)), CoverPoint(label, (glued[1],)))
            )
            pairs_nodes.append(
                (
                    CoverPoint(label, induced.cycle_through(PARTITION_BLOCKS[glued[0] - 1][0])),
                    CoverPoint(label, induced.cycle_through(PARTITION_BLOCKS[glued[1] - 1][0])),
                )
            )
        elif fiber == FIBER_QUADRUPLE:
            action = trigonal_cover.perm_at(label)
            moved = action.cycles()
            if len(moved) != 1 or len(moved[0]) != 2:
                raise AssertionError(f"type 5 fibre at {label!r} without a partition transposition")
            (fixed,) = tuple(q for q in range(1, 4) if action(q) == q)
            trigonal_nodes.append((CoverPoint(label, moved[0]), CoverPoint(label, (fixed,))))
            pairs_nodes.append(
                (
                    CoverPoint(label, induced.cycle_through(PARTITION_BLOCKS[moved[0][0] - 1][0])),
                    CoverPoint(label, induced.cycle_through(PARTITION_BLOCKS[fixed - 1][0])),
                )
            )

    return InverseResult(
        source=tetragonal,
        pairs_cover=pairs_cover,
        complement=kappa,
        blocks=PARTITION_BLOCKS,
        trigonal_cover=trigonal_cover,
        fiber_types=types,
        trigonal_model=NodalCoverModel(trigonal_cover, tuple(trigonal_nodes)),
        pairs_model=NodalCoverModel(pairs_cover, tuple(pairs_nodes)),
    )


def as_tower(result: InverseResult) -> Tower:
    """Re-validate an inverse image as a smooth tower.

    Meaningful when the result carries no nodes (the source lay in the
    ``m0`` stratum); otherwise validation reports the degeneracies.
    """
    return validate_tower(result.pairs_cover, result.blocks)


@dataclass(frozen=True)
class GluedTower:
    """A Special tower with the two flipped points glued on each level."""

    trigonal_model: NodalCoverModel
    double_model: NodalCoverModel
    blocks: BlockSystem


def glue_special(tower: Tower) -> GluedTower:
    """Glue the two flipped points of a Special tower into nodes.

    Downstairs the two flipped blocks over the flip label are glued;
    upstairs the two in-block 2-cycles above them are glued.  The glued
    trigonal curve has arithmetic genus one more than the tower's, the
    glued top curve one more than twice the tower's minus one.
    """
    if tower.mode != SPECIAL:
        raise ValueError(f"gluing is defined for special towers, mode is {tower.mode!r}")
    label = tower.flips[0].label
    first_block, second_block = sorted(p.cycle[0] for p in tower.flips)
    perm = tower.cover.perm_at(label)
    trigonal_model = NodalCoverModel(
        tower.trigonal,
        ((CoverPoint(label, (first_block,)), CoverPoint(label, (second_block,))),),
    )
    double_model = NodalCoverModel(
        tower.cover,
        (
            (
                CoverPoint(label, perm.cycle_through(tower.blocks[first_block - 1][0])),
                CoverPoint(label, perm.cycle_through(tower.blocks[second_block - 1][0])),
            ),
        ),
    )
    glued = GluedTower(trigonal_model, double_model, tower.blocks)
    if arithmetic_genus(trigonal_model) != tower.genus + 1:
        raise AssertionError("glued trigonal curve has the wrong arithmetic genus")
    if arithmetic_genus(double_model) != 2 * tower.genus + 1:
        raise AssertionError("glued top curve has the wrong arithmetic genus")
    return glued


def _blocks_correspond(rho: Permutation, source: BlockSystem, target: BlockSystem) -> bool:
    mapped = {frozenset(rho(s) for s in block) for block in source}
    return mapped == {frozenset(block) for block in target}


def match_glued(result: InverseResult, glued: GluedTower) -> CheckReport:
    """Compare an inverse image with a glued tower, nodes included.

    The degree-6 comparison additionally requires the relabeling to
    carry complement orbits onto the glued tower's blocks.
    """
    checks: list[CheckResult] = []
    try:
        rho3 = nodal_isomorphism(result.trigonal_model, glued.trigonal_model)
        checks.append(
            CheckResult(
                "trigonal-curves-match",
                rho3 is not None,
                "no relabeling aligns the glued trigonal curves and their nodes",
            )
        )
    except ValueError as err:
        checks.append(CheckResult("trigonal-curves-match", False, str(err)))

    try:
        found = False
        want = glued.double_model.node_set()
        for rho in iter_isomorphisms(result.pairs_model.normalization, glued.double_model.normalization):
            image = frozenset(
                frozenset(p.mapped(rho) for p in pair) for pair in result.pairs_model.nodes
            )
            if image == want and _blocks_correspond(rho, result.blocks, glued.blocks):
                found = True
                break
        checks.append(
            CheckResult(
                "double-covers-match",
                found,
                "no relabeling aligns the glued top curves with nodes and blocks",
            )
        )
    except ValueError as err:
        checks.append(CheckResult("double-covers-match", False, str(err)))

    return CheckReport("glued-comparison", tuple(checks))


def roundtrip_special(tower: Tower) -> CheckReport:
    """Special round trip: forward, take a component, invert, compare
    with the directly glued tower."""
    if tower.mode != SPECIAL:
        raise ValueError(f"round trip needs a special tower, mode is {tower.mode!r}")
    checks: list[CheckResult] = []
    try:
        tetragonal = TetragonalCover(component_tetragonal(construct(tower)))
    except (ValueError, AssertionError) as err:
        checks.append(CheckResult("component-extraction", False, str(err)))
        return CheckReport("roundtrip-special", tuple(checks))
    checks.append(CheckResult("component-extraction", True))
    checks.append(
        CheckResult(
            "component-stratum",
            tetragonal.stratum == STRATUM_M1,
            f"stratum {tetragonal.stratum!r}",
        )
    )
    checks.append(
        CheckResult(
            "component-genus",
            tetragonal.genus == tower.genus,
            f"genus {tetragonal.genus}, expected {tower.genus}",
        )
    )
    comparison = match_glued(invert(tetragonal), glue_special(tower))
    checks.extend(comparison.checks)
    return CheckReport("roundtrip-special", tuple(checks))


def roundtrip_etale(tetragonal: TetragonalCover) -> CheckReport:
    """Etale round trip: invert a smooth (``m0``) tetragonal cover and
    run the forward construction; both components must recover the
    input."""
    if tetragonal.stratum != STRATUM_M0:
        raise ValueError(
            f"the etale round trip needs an m0 cover, stratum is {tetragonal.stratum!r}"
        )
    checks: list[CheckResult] = []
    inverse = invert(tetragonal)
    try:
        tower = as_tower(inverse)
        checks.append(CheckResult("inverse-validates", True))
    except TowerValidationError as err:
        checks.append(CheckResult("inverse-validates", False, str(err)))
        return CheckReport("roundtrip-etale", tuple(checks))
    checks.append(CheckResult("inverse-is-etale", tower.mode == ETALE, f"mode {tower.mode!r}"))
    checks.append(
        CheckResult(
            "inverse-genus",
            tower.genus == tetragonal.genus + 1,
            f"tower genus {tower.genus}, expected {tetragonal.genus + 1}",
        )
    )
    result = construct(tower)
    parts = components(result.sections)
    checks.append(CheckResult("sections-split-in-two", len(parts) == 2, f"{len(parts)} components"))
    if len(parts) == 2:
        for which, part in zip(("first", "second"), parts):
            try:
                rho = are_isomorphic(part.cover, tetragonal.cover)
                checks.append(
                    CheckResult(
                        f"{which}-component-recovers-input",
                        rho is not None,
                        "" if rho is not None else "no relabeling matches the component",
                    )
                )
            except ValueError as err:
                checks.append(CheckResult(f"{which}-component-recovers-input", False, str(err)))
    return CheckReport("roundtrip-etale", tuple(checks))
