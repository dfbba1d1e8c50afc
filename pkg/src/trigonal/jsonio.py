"""Canonical JSON for covers, towers, results and reports.

One canonical rendering is used everywhere: two-space indent, sorted
keys, trailing newline.  Parsing then serializing a canonical document
reproduces it byte for byte, which is what makes reports comparable
across runs and machines.

Monodromy is written in cycle form, 1-based, fixed sheets unlisted.
Fibre points are written as ``[label, cycle_index]`` where the index
counts the cycles of the monodromy over that label (fixed sheets
included, ordered by smallest sheet) starting from 1; labels the cover
is not branched over fall back to the singleton listing, so points
over unbranched fibres serialize the same way.
"""
from __future__ import annotations

import json
from typing import Any, Mapping, Sequence

from .batch import BatchReport
from .coefficients import ChainRow
from .covers import BranchedCover, CoverPoint, NodalCoverModel, label_cycles
from .forward import ForwardResult
from .inverse import InverseResult, TetragonalCover
from .permutation import Permutation
from .report import CheckReport
from .towers import BlockSystem, Tower, validate_tower


def dumps_canonical(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


# -- permutations and covers -------------------------------------------------

def perm_to_cycles(perm: Permutation) -> list[list[int]]:
    return [list(c) for c in perm.cycles()]


def perm_from_cycles(degree: int, cycles: Sequence[Sequence[int]]) -> Permutation:
    return Permutation.from_cycles(degree, [tuple(c) for c in cycles])


def cover_to_dict(cover: BranchedCover) -> dict:
    return {
        "degree": cover.degree,
        "branch_points": [
            {"label": label, "monodromy": perm_to_cycles(perm)}
            for label, perm in cover.entries()
        ],
    }


def cover_from_dict(payload: Mapping) -> BranchedCover:
    try:
        degree = payload["degree"]
        points = payload["branch_points"]
    except (KeyError, TypeError) as err:
        raise ValueError(f"cover document needs degree and branch_points: {err}") from None
    if not isinstance(degree, int):
        raise ValueError(f"degree must be an integer, got {degree!r}")
    entries = []
    for point in points:
        entries.append((point["label"], perm_from_cycles(degree, point["monodromy"])))
    return BranchedCover.from_pairs(degree, entries)


# -- towers ------------------------------------------------------------------

def tower_to_dict(tower: Tower) -> dict:
    payload = cover_to_dict(tower.cover)
    payload["blocks"] = [list(b) for b in tower.blocks]
    return payload


def tower_from_dict(payload: Mapping) -> Tower:
    cover = cover_from_dict(payload)
    if "blocks" not in payload:
        raise ValueError("tower document needs a blocks field")
    blocks = BlockSystem.from_pairs(payload["blocks"])
    return validate_tower(cover, blocks)


def tetragonal_from_dict(payload: Mapping) -> TetragonalCover:
    return TetragonalCover(cover_from_dict(payload))


# -- fibre points and node markers -------------------------------------------

def point_to_ref(cover: BranchedCover, point: CoverPoint) -> list:
    cycles = label_cycles(cover, point.label)
    return [point.label, cycles.index(point.cycle) + 1]


def point_from_ref(cover: BranchedCover, ref: Sequence) -> CoverPoint:
    label, index = ref
    cycles = label_cycles(cover, label)
    if not 1 <= index <= len(cycles):
        raise ValueError(f"cycle index {index} out of range over {label!r}")
    return CoverPoint(label, cycles[index - 1])


def nodes_to_list(model: NodalCoverModel) -> list:
    return [
        [point_to_ref(model.normalization, a), point_to_ref(model.normalization, b)]
        for a, b in model.nodes
    ]


def model_from_parts(cover: BranchedCover, node_refs: Sequence) -> NodalCoverModel:
    nodes = tuple(
        (point_from_ref(cover, a), point_from_ref(cover, b)) for a, b in node_refs
    )
    return NodalCoverModel(cover, nodes)


# -- construction results ----------------------------------------------------

def forward_result_to_dict(result: ForwardResult) -> dict:
    payload = {
        "tower": tower_to_dict(result.tower),
        "mode": result.tower.mode,
        "genus": result.tower.genus,
        "sections_cover": cover_to_dict(result.sections),
        "involution": list(result.involution.images),
        "quotient_cover": cover_to_dict(result.quotient),
        "orientation_cover": cover_to_dict(result.orientation),
        "to_quotient": list(result.to_quotient),
        "to_orientation": list(result.to_orientation),
        "node_markers": None,
    }
    if result.nodes is not None:
        payload["node_markers"] = {
            "sections": nodes_to_list(result.nodes.sections),
            "quotient": nodes_to_list(result.nodes.quotient),
            "orientation": nodes_to_list(result.nodes.orientation),
        }
    return payload


def inverse_result_to_dict(result: InverseResult) -> dict:
    return {
        "source": cover_to_dict(result.source.cover),
        "stratum": result.source.stratum,
        "pairs_cover": cover_to_dict(result.pairs_cover),
        "blocks": [list(b) for b in result.blocks],
        "complement_involution": list(result.complement.images),
        "trigonal_cover": cover_to_dict(result.trigonal_cover),
        "fiber_types": dict(sorted(result.fiber_types.items())),
        "trigonal_nodes": nodes_to_list(result.trigonal_model),
        "pairs_nodes": nodes_to_list(result.pairs_model),
    }


# -- reports -----------------------------------------------------------------

def check_report_to_dict(report: CheckReport) -> dict:
    return {
        "title": report.title,
        "passed": report.passed,
        "checks": [
            {"name": c.name, "passed": c.passed, "detail": c.detail} for c in report.checks
        ],
    }


def batch_report_to_dict(report: BatchReport, include_timing: bool = False) -> dict:
    payload = {
        "suite": report.suite,
        "passed": report.passed,
        "instance_count": len(report.instances),
        "aggregate": {
            name: {"pass": p, "fail": f} for name, (p, f) in report.aggregate().items()
        },
        "instances": [
            {
                "index": inst.index,
                "genus": inst.genus,
                "mode": inst.mode,
                "seed": inst.seed,
                "passed": inst.passed,
                "checks": [
                    {"name": c.name, "passed": c.passed, "detail": c.detail}
                    for c in inst.checks
                ],
            }
            for inst in report.instances
        ],
    }
    if include_timing:
        payload["elapsed_seconds"] = report.elapsed_seconds
    return payload


def chain_rows_to_dict(rows: Sequence[ChainRow]) -> dict:
    def fraction_str(value) -> str:
        return str(value)

    return {
        "genus_min": rows[0].genus if rows else None,
        "genus_max": rows[-1].genus if rows else None,
        "all_chains_equal_one": all(r.chain == 1 for r in rows),
        "rows": [
            {
                "genus": r.genus,
                "reduced_identity": r.reduced,
                "chain": fraction_str(r.chain),
                "chain_terms": [fraction_str(t) for t in r.chain_terms],
                "variant_with_power_factor": fraction_str(r.variant_with_power_factor),
                "variants_agree": r.chain == r.variant_with_power_factor,
            }
            for r in rows
        ],
    }


# -- schemas -----------------------------------------------------------------

def load_schema(name: str) -> dict:
    """A published JSON schema by stem name, e.g. ``cover`` or ``tower``."""
    from importlib import resources

    path = resources.files("trigonal").joinpath("schemas", f"{name}.schema.json")
    return json.loads(path.read_text())
