"""Seeded rejection sampling of towers and tetragonal covers.

Randomness comes from SplitMix64, a tiny well-documented 64-bit mixer,
so identical seeds give identical draws on every platform and Python
version.  All sampling is rejection-shaped: draw a candidate from a
constrained family, run the full validator, retry on failure.  The
retry loop consumes the single seeded stream, so results stay
deterministic even though the number of attempts varies.

Tower drawing order, fixed for reproducibility:

  1. base monodromy on three sheets, one draw per label except the
     last, which is solved from the product-one relation and retried
     if its cycle type misses the requested mix;
  2. a lift vector per label (in-block pairing choices) restricted to
     the patterns that keep the in-block double cover unramified over
     branch labels of the base, the final lift again being solved;
  3. flip labels appended after the base labels: two single flips at
     fresh labels (general), one double flip (special), none (etale).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .covers import BranchedCover
from .inverse import STRATUM_M0, TetragonalCover, classify_fiber
from .permutation import Permutation, compose, orbits, product
from .towers import (
    GENERAL,
    MODES,
    SPECIAL,
    BlockSystem,
    Tower,
    TowerValidationError,
    block_action,
    validate_tower,
)

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15

SAMPLE_M0 = "m0"
SAMPLE_KINDS = MODES + (SAMPLE_M0,)

CANONICAL_BLOCKS = BlockSystem.from_pairs([(1, 2), (3, 4), (5, 6)])


class SplitMix64:
    """The SplitMix64 generator: 64-bit state, golden-ratio increment,
    two xor-multiply finalization rounds per output."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError(f"need a positive bound, got {n}")
        return self.next_u64() % n

    def choice(self, seq: Sequence):
        return seq[self.below(len(seq))]


def derive_seed(master: int, index: int) -> int:
    """Stable per-instance sub-seed; independent of evaluation order."""
    return SplitMix64((master ^ ((index + 1) * _GOLDEN)) & _MASK64).next_u64()


@dataclass(frozen=True)
class SampleConfig:
    """What to sample: a tower in one of the three modes, or an ``m0``
    tetragonal cover.

    ``three_cycle_labels`` trades two units of the ramification budget
    per label away from transpositions; the default spends the whole
    budget on transpositions.
    """

    genus: int
    mode: str
    seed: int
    max_retries: int = 1000
    three_cycle_labels: int = 0

    def __post_init__(self) -> None:
        if self.mode not in SAMPLE_KINDS:
            raise ValueError(f"mode must be one of {SAMPLE_KINDS}, got {self.mode!r}")
        minimum = 2 if self.mode == SAMPLE_M0 else 3
        if self.genus < minimum:
            raise ValueError(f"genus {self.genus} below the minimum {minimum} for {self.mode!r}")
        if self.max_retries < 1:
            raise ValueError("max_retries must be positive")
        if self.three_cycle_labels < 0:
            raise ValueError("three_cycle_labels must be non-negative")
        if self.transposition_labels < 0:
            raise ValueError(
                f"{self.three_cycle_labels} three-cycle labels overrun the "
                f"ramification budget {self.ramification_budget}"
            )

    @property
    def ramification_budget(self) -> int:
        return 2 * self.genus + (6 if self.mode == SAMPLE_M0 else 4)

    @property
    def transposition_labels(self) -> int:
        return self.ramification_budget - 2 * self.three_cycle_labels


def _transpositions(degree: int) -> tuple[Permutation, ...]:
    out = []
    for a in range(1, degree + 1):
        for b in range(a + 1, degree + 1):
            out.append(Permutation.from_cycles(degree, [(a, b)]))
    return tuple(out)


def _three_cycles(degree: int) -> tuple[Permutation, ...]:
    out = []
    for a in range(1, degree + 1):
        for b in range(1, degree + 1):
            for c in range(1, degree + 1):
                if len({a, b, c}) == 3 and a == min(a, b, c):
                    out.append(Permutation.from_cycles(degree, [(a, b, c)]))
    return tuple(out)


_BASE_TRANSPOSITIONS = _transpositions(3)
_BASE_THREE_CYCLES = _three_cycles(3)
_TET_TRANSPOSITIONS = _transpositions(4)
_TET_THREE_CYCLES = _three_cycles(4)


def _solve_last(prefix: Sequence[Permutation], suffix: Sequence[Permutation], degree: int) -> Permutation:
    """The unique permutation making prefix + [x] + suffix multiply to
    the identity, leftmost factor applied first."""
    return compose(product(tuple(suffix), degree), product(tuple(prefix), degree)).inverse()


def _draw_base(rng: SplitMix64, cfg: SampleConfig, degree: int) -> list[Permutation] | None:
    transpositions = _BASE_TRANSPOSITIONS if degree == 3 else _TET_TRANSPOSITIONS
    three_cycles = _BASE_THREE_CYCLES if degree == 3 else _TET_THREE_CYCLES
    wanted = [2] * cfg.transposition_labels + [3] * cfg.three_cycle_labels
    drawn = [
        rng.choice(transpositions if w == 2 else three_cycles) for w in wanted[:-1]
    ]
    last = _solve_last(drawn, (), degree)
    want_type = (2,) + (1,) * (degree - 2) if wanted[-1] == 2 else (3,) + (1,) * (degree - 3)
    if last.cycle_type() != want_type:
        return None
    drawn.append(last)
    if len(orbits(drawn, degree)) != 1:
        return None
    return drawn


def _etale_lift_options(action: Permutation) -> tuple[tuple[int, int, int], ...]:
    """Lift vectors that keep the in-block double cover unramified over
    every point of the base fibre: zero on fixed blocks, even sum
    around every cycle."""
    options = []
    for bits in range(8):
        v = ((bits >> 2) & 1, (bits >> 1) & 1, bits & 1)
        ok = True
        for cycle in action.cycles(include_fixed=True):
            total = sum(v[b - 1] for b in cycle)
            if (len(cycle) == 1 and total) or total % 2:
                ok = False
                break
        if ok:
            options.append(v)
    return tuple(options)


def _lift(action: Permutation, v: tuple[int, int, int], blocks: BlockSystem) -> Permutation:
    images = [0] * 6
    for j in range(3):
        for pos in range(2):
            sheet = blocks[j][pos]
            images[sheet - 1] = blocks[action(j + 1) - 1][pos ^ v[j]]
    return Permutation(tuple(images))


def _lift_vector(perm: Permutation, action: Permutation, blocks: BlockSystem) -> tuple[int, int, int]:
    return tuple(
        0 if perm(blocks[j][0]) == blocks[action(j + 1) - 1][0] else 1 for j in range(3)
    )  # type: ignore[return-value]


def _flip(blocks_to_flip: Sequence[int], blocks: BlockSystem) -> Permutation:
    cycles = [blocks[j - 1] for j in blocks_to_flip]
    return Permutation.from_cycles(6, cycles)


def _label(prefix: str, i: int, width: int) -> str:
    return f"{prefix}{i + 1:0{width}d}"


def sample_tower(cfg: SampleConfig) -> Tower:
    """Draw a tower of the requested mode and genus.

    Deterministic for a fixed config; raises ``RuntimeError`` when the
    retry budget runs out.  Every returned tower has passed
    ``validate_tower``.
    """
    if cfg.mode == SAMPLE_M0:
        raise ValueError("m0 configs sample tetragonal covers; use sample_tetragonal")
    rng = SplitMix64(cfg.seed)
    blocks = CANONICAL_BLOCKS
    label_count = cfg.transposition_labels + cfg.three_cycle_labels
    width = max(2, len(str(label_count)))

    for _ in range(cfg.max_retries):
        base = _draw_base(rng, cfg, 3)
        if base is None:
            continue

        if cfg.mode == GENERAL:
            flips = [_flip((1 + rng.below(3),), blocks), _flip((1 + rng.below(3),), blocks)]
        elif cfg.mode == SPECIAL:
            kept = rng.below(3) + 1
            flips = [_flip(tuple(sorted(set((1, 2, 3)) - {kept})), blocks)]
        else:
            flips = []

        lifts = []
        for action in base[:-1]:
            options = _etale_lift_options(action)
            lifts.append(_lift(action, rng.choice(options), blocks))
        last = _solve_last(lifts, flips, 6)
        last_action = block_action(last, blocks)  # solved lift is block-preserving by closure
        if last_action != base[-1]:
            continue
        if _lift_vector(last, last_action, blocks) not in _etale_lift_options(last_action):
            continue
        lifts.append(last)

        entries = [(_label("h", i, width), p) for i, p in enumerate(lifts)]
        entries += [(f"f{i + 1}", p) for i, p in enumerate(flips)]
        try:
            cover = BranchedCover.from_pairs(6, entries)
            tower = validate_tower(cover, blocks)
        except (ValueError, TowerValidationError):
            continue
        if tower.mode != cfg.mode or tower.genus != cfg.genus:
            continue
        return tower
    raise RuntimeError(
        f"retry budget {cfg.max_retries} exhausted sampling a {cfg.mode} tower of genus {cfg.genus}"
    )


def sample_tetragonal(cfg: SampleConfig) -> TetragonalCover:
    """Draw a connected degree-4 cover in the smooth (``m0``) stratum."""
    if cfg.mode != SAMPLE_M0:
        raise ValueError(f"tetragonal sampling needs an {SAMPLE_M0!r} config, got {cfg.mode!r}")
    rng = SplitMix64(cfg.seed)
    label_count = cfg.transposition_labels + cfg.three_cycle_labels
    width = max(2, len(str(label_count)))
    for _ in range(cfg.max_retries):
        base = _draw_base(rng, cfg, 4)
        if base is None:
            continue
        cover = BranchedCover.from_pairs(
            4, ((_label("b", i, width), p) for i, p in enumerate(base))
        )
        tetragonal = TetragonalCover(cover)
        if tetragonal.stratum != STRATUM_M0 or tetragonal.genus != cfg.genus:
            continue
        return tetragonal
    raise RuntimeError(
        f"retry budget {cfg.max_retries} exhausted sampling an m0 cover of genus {cfg.genus}"
    )
