import pytest

from stcut import GenSpec, generate

CORPUS_SIZE = 1000


def corpus_spec(i: int) -> GenSpec:
    """Fixed-seed random corpus: n in [2, 12], density in [0.5, 3.0]."""
    return GenSpec(
        family="random_digraph",
        n=2 + i % 11,
        density=0.5 + (i % 26) * 0.1,
        seed=20_000 + i,
    )


def corpus_instances(count: int = CORPUS_SIZE):
    for i in range(count):
        g, s, t, _ = generate(corpus_spec(i))
        yield i, g, s, t


@pytest.fixture(scope="session")
def small_corpus():
    """A 200-instance slice of the acceptance corpus for the unit tests."""
    return [(i, g, s, t) for i, g, s, t in corpus_instances(200)]
