"""Exact verification of cluster-algebra and projection-tower identities.

Laurent arithmetic over big integers, seed mutation, rank-2 exchange
sequences, Chebyshev identities, the annulus casimir and its modulus
resolution, Temperley-Lieb towers, the admissible index spectrum, and
Bratteli-diagram combinatorics -- each exposed both as a library and through
an HTTP service with a thin command-line client.
"""

from .annulus import (
    CasimirCheck,
    PennerPoint,
    TeichmullerParam,
    annulus_seed,
    casimir,
    penner_resolution,
    verify_casimir_halfsum,
)
from .bratteli import (
    BratteliDiagram,
    PowersSpec,
    car_diagram,
    embedding_dimension_check,
    gicar_diagram,
    powers_unitary,
    push_dimension_vector,
)
from .chebyshev import (
    ChebyshevOfCasimir,
    ChebyshevPoly,
    MonomialPair,
    basis_expand,
    chebyshev_T,
    verify_composition,
    verify_halfsum_identity,
)
from .cluster import (
    MutationReport,
    Rank2Params,
    Seed,
    check_laurent_phenomenon,
    iterate_mutations,
    mutate_seed,
    rank2_sequence,
)
from .laurent import LaurentPoly, NotLaurentError, laurent_gens, parse_laurent
from .matrices import Matrix
from .spectrum import (
    IndexValue,
    SingularTraceError,
    SpectrumReport,
    index_of,
    jones_spectrum,
    solve_chebyshev_unit,
)
from .temperley_lieb import (
    AuditReport,
    TLTower,
    audit_printed_formula,
    jones_projection,
    printed_projection_variant,
    tl_algebra_dimension,
    tl_generators,
    verify_tl_relations,
)
from .walkthrough import WalkthroughReport, run_walkthrough

__version__ = "0.1.0"

__all__ = [
    "AuditReport",
    "BratteliDiagram",
    "CasimirCheck",
    "ChebyshevOfCasimir",
    "ChebyshevPoly",
    "IndexValue",
    "LaurentPoly",
    "Matrix",
    "MonomialPair",
    "MutationReport",
    "NotLaurentError",
    "PennerPoint",
    "PowersSpec",
    "Rank2Params",
    "Seed",
    "SingularTraceError",
    "SpectrumReport",
    "TLTower",
    "TeichmullerParam",
    "WalkthroughReport",
    "annulus_seed",
    "audit_printed_formula",
    "basis_expand",
    "car_diagram",
    "casimir",
    "chebyshev_T",
    "check_laurent_phenomenon",
    "embedding_dimension_check",
    "gicar_diagram",
    "index_of",
    "iterate_mutations",
    "jones_projection",
    "jones_spectrum",
    "laurent_gens",
    "mutate_seed",
    "parse_laurent",
    "penner_resolution",
    "powers_unitary",
    "printed_projection_variant",
    "push_dimension_vector",
    "rank2_sequence",
    "run_walkthrough",
    "solve_chebyshev_unit",
    "tl_algebra_dimension",
    "tl_generators",
    "verify_casimir_halfsum",
    "verify_composition",
    "verify_halfsum_identity",
    "verify_tl_relations",
]
