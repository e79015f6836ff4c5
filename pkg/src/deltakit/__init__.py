"""Delta sets of nonsymmetric numerical semigroups with three generators."""

from deltakit.bezout import (
    BezoutCouple,
    BezoutTable,
    Kind,
    TauVector,
    bezout_table,
    build_table,
    classify_irreducible,
    delta_set_via_table,
    lambda_couple,
    mu_couple,
    table_delta_set,
    tau_vector,
    witness_element,
    witness_for,
)
from deltakit.errors import (
    ArithmeticOverflow,
    DeltaKitError,
    DuplicateGenerator,
    IndexOutOfRange,
    InvalidGenerators,
    NonPositive,
    NotCoprime,
    NotMinimal,
    SearchBoundExceeded,
    SymmetricSemigroup,
)
from deltakit.euclid import (
    EuclidStage,
    EuclidTrace,
    couple_descend,
    couple_lift,
    delta_set_fast,
    euclid_couples,
    euclid_remainder_set,
    euclid_trace,
)
from deltakit.oracle import VerificationReport, oracle_delta_union, verify
from deltakit.presentation import (
    DeltaInvariants,
    MinimalPresentation,
    critical_multiple,
    delta_invariants,
    is_symmetric,
    minimal_presentation,
)
from deltakit.semigroup import (
    DeltaSet,
    Factorization,
    GeneratorTriple,
    delta_of_element,
    enumerate_factorizations,
    two_gen_membership,
    validate_generators,
)

__version__ = "0.1.0"
