import pytest

from finrel import Relation


@pytest.fixture
def t_relation() -> Relation:
    """Three-point trivial idempotent relation that is not surjective."""
    return Relation.from_pairs(3, [(0, 0), (1, 1), (2, 0), (2, 1)])


@pytest.fixture
def swap() -> Relation:
    """The two-point swap; full, not idempotent (its square is the identity)."""
    return Relation.from_pairs(2, [(0, 1), (1, 0)])
