"""Relation algebra on finite point sets.

Composition, inversion, restriction and the predicate suite (full,
idempotent, surjective, single-valued, trivial, gamma) over relations on
{0, ..., n-1}; constructive witness chains turning nontriviality into a
gamma pattern; an exhaustive census of all full relations up to n=5; and
generalized inverse limits (Mahavier products) over finite chains.
"""

from .census import (
    SurveyReport,
    canonical_form,
    full_relations,
    idempotent_power,
    idempotent_relations,
    random_full_relation,
    random_idempotent,
    survey,
)
from .core import (
    PreconditionError,
    PropertyReport,
    Relation,
    all_relations,
    apply_permutation,
    compose,
    identity,
    image,
    inverse,
    is_full,
    is_idempotent,
    is_single_valued,
    is_surjective,
    is_trivial,
    nontriviality_witness,
    properties,
    restrict,
    satisfies_gamma,
    two_point_witness,
)
from .io import RelationParseError, parse_relation, serialize_relation
from .mahavier import (
    OrderProfile,
    ThreadSet,
    gamma_relation,
    iter_threads,
    thread_order_profile,
    threads_naive,
    threads_propagate,
)
from .witness import (
    GammaWitness,
    WitnessChain,
    gamma_from_seed,
    gamma_witness,
    reflexive_pair_witness,
)

__version__ = "0.1.0"

__all__ = [
    "GammaWitness",
    "OrderProfile",
    "PreconditionError",
    "PropertyReport",
    "Relation",
    "RelationParseError",
    "SurveyReport",
    "ThreadSet",
    "WitnessChain",
    "all_relations",
    "apply_permutation",
    "canonical_form",
    "compose",
    "full_relations",
    "gamma_from_seed",
    "gamma_relation",
    "gamma_witness",
    "identity",
    "idempotent_power",
    "idempotent_relations",
    "image",
    "inverse",
    "is_full",
    "is_idempotent",
    "is_single_valued",
    "is_surjective",
    "is_trivial",
    "iter_threads",
    "nontriviality_witness",
    "parse_relation",
    "properties",
    "random_full_relation",
    "random_idempotent",
    "reflexive_pair_witness",
    "restrict",
    "satisfies_gamma",
    "serialize_relation",
    "survey",
    "thread_order_profile",
    "threads_naive",
    "threads_propagate",
    "two_point_witness",
]
