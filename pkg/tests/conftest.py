import pytest

from autcrit.catalog import build_group, catalog


@pytest.fixture(scope="session")
def corpus():
    """name -> (spec, built group) for the whole catalog."""
    return {spec.name: (spec, build_group(spec)) for spec in catalog()}


@pytest.fixture(scope="session")
def nonabelian_corpus(corpus):
    return {
        name: g for name, (spec, g) in corpus.items() if not g.is_abelian()
    }


@pytest.fixture(scope="session")
def corpus_under_64(corpus):
    return {name: g for name, (spec, g) in corpus.items() if g.n <= 64}
