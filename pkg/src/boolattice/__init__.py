"""Union-closed families of finite integer sets and their quark factorizations.

The package materializes the union closure of a generator family, counts
and classifies factorizations into quarks (the minimal nonempty elements),
and decides unique-, half- and length-factoriality both by exhaustive
enumeration and through pairing-graph characterizations.
"""

from .errors import (
    BoolatticeError,
    ClosureCapExceeded,
    ElementNotInLattice,
    NotAComponent,
    NotFactorable,
    NotFactorizable,
    ParseError,
    PreconditionViolated,
    QuarkTooLarge,
    UnknownExample,
    VerificationFailed,
)
from .sets import EMPTY, FiniteSet, union_all
from .lattice import DEFAULT_MAX_CLOSURE, CoverRelation, Sublattice, close
from .factorize import (
    ClassificationReport,
    Factorization,
    Witness,
    classify_brute,
    decompose,
    elasticity_of,
    elasticity_of_lattice,
    factorization_product_check,
    factorizations,
    length_set,
)
from .structure import (
    ComponentKind,
    ComponentShape,
    Finding,
    HFS_KINDS,
    PairingGraph,
    QuarkicGraph,
    UFS_KINDS,
    classify_structural,
    component_shape,
    component_shapes,
    excess_quarks,
    forbidden_subgraph_scan,
    graph_from_edges,
    isolated_quarks,
    pairing_dot,
    pairing_graph,
    quarkic_dot,
    quarkic_graph,
    ufs_sufficient_disjoint_excess,
)
from .constructions import (
    ConstructionOutput,
    ElasticitySpec,
    EXAMPLE_NAMES,
    LayeredSpec,
    VerificationReport,
    build_elasticity_lattice,
    build_layered_lattice,
    mediant_bound,
    named_example,
    verify_elasticity_construction,
    verify_layered_lattice,
)
from .genfile import (
    generators_text,
    parse_element,
    parse_generators,
    read_construction_meta,
    read_generators,
    sidecar_path,
    write_construction,
)

__version__ = "0.1.0"
