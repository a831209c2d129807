"""qcomb: exact computations with quantum sets, quantum logic, and quivers."""

from .exact import Matrix, ONE, Scalar, Tensor3, ZERO, kernel, solve
from .coalgebra import (
    Coalgebra,
    Element,
    comatrix,
    empty,
    fd_category,
    fd_monoid_additive,
    linearize,
    omega,
    opposite,
    singleton,
    tensor,
    validate,
)
from .maps import CoalgebraMap, is_coalgebra_map
from .convolution import (
    AdmissiblePair,
    ConvElement,
    admissible_pair,
    conv_mul,
    conv_unit,
    functionals_admissible,
    is_admissible,
    orthogonal_idempotent_family,
    assemble_orthogonal_family,
    pair,
    partial_assoc_check,
)
from .elements import (
    grouplikes,
    is_grouplike,
    matrix_unit_system_check,
    nilpotent_element_check,
    primitives,
)
from .logic import (
    Proposition,
    State,
    expectation,
    positivity_check,
    prop_and,
    prop_or,
    star_on_functionals,
    truth_value_map,
)
from .boolean import (
    LatticeTable,
    QBoolStructure,
    check_complement,
    check_lattice_axioms,
    check_weak_de_morgan,
    linearize_boolean,
    negation_uniqueness_probe,
)
from .quivers import (
    ClassicalQuiver,
    Comodule,
    QuantumQuiver,
    adjunction_check,
    coinduce,
    comodule_validate,
    corestrict,
    cotensor,
    from_classical,
    quantum_quiver_check,
)
from .leavitt import (
    LpaElement,
    LpaMonomial,
    RewriteContext,
    StableRep,
    basis_closure,
    cp_relation_audit,
    lpa_normalize,
    module_to_rep,
    rep_to_module,
    stable_rep_check,
)

__version__ = "0.1.0"
