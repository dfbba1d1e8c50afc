import json
from pathlib import Path

import pytest
from hypothesis import HealthCheck, assume, settings
from hypothesis import strategies as st

from trigonal import BlockSystem, BranchedCover, Permutation, product

settings.register_profile(
    "suite",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
    max_examples=60,
)
settings.load_profile("suite")

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixture_doc():
    def load(name):
        return json.loads((FIXTURES / name).read_text())

    return load


@pytest.fixture(scope="session")
def fixture_text():
    def load(name):
        return (FIXTURES / name).read_text()

    return load


def permutations(degree):
    return st.permutations(range(1, degree + 1)).map(lambda seq: Permutation(tuple(seq)))


def nontrivial_permutations(degree):
    return permutations(degree).filter(lambda p: not p.is_identity())


@st.composite
def product_one_tuples(draw, degree, length):
    """length nontrivial permutations multiplying to the identity,
    built by drawing all but the last and solving for it."""
    assert length >= 2
    head = draw(
        st.lists(nontrivial_permutations(degree), min_size=length - 1, max_size=length - 1)
    )
    last = product(head, degree).inverse()
    assume(not last.is_identity())
    return head + [last]


@st.composite
def transitive_covers(draw, degree, length=6):
    perms = draw(product_one_tuples(degree, length))
    cover = BranchedCover.from_pairs(
        degree, [(f"p{i:02d}", perm) for i, perm in enumerate(perms, start=1)]
    )
    if not cover.is_connected():
        # adjoin a full cycle and its inverse to force one orbit
        cycle = Permutation.from_cycles(degree, [tuple(range(1, degree + 1))])
        perms = perms + [cycle, cycle.inverse()]
        cover = BranchedCover.from_pairs(
            degree, [(f"p{i:02d}", perm) for i, perm in enumerate(perms, start=1)]
        )
    return cover


def block_preserving_permutations():
    """Degree-6 permutations preserving the pairing {1,2}{3,4}{5,6}."""
    blocks = ((1, 2), (3, 4), (5, 6))

    def build(action_and_bits):
        action, bits = action_and_bits
        images = [0] * 6
        for b, (x, y) in enumerate(blocks):
            tx, ty = blocks[action[b] - 1]
            if bits[b]:
                tx, ty = ty, tx
            images[x - 1] = tx
            images[y - 1] = ty
        return Permutation(tuple(images))

    return st.tuples(
        st.permutations([1, 2, 3]).map(tuple),
        st.tuples(st.booleans(), st.booleans(), st.booleans()),
    ).map(build)


CANONICAL_BLOCKS = BlockSystem.from_pairs([(1, 2), (3, 4), (5, 6)])
