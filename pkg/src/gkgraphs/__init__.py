"""Gruenberg-Kegel (prime) graphs of finite groups.

Construct prime graphs from element-order spectra, analyse them with
exact combinatorial searches, and run the structural checks that every
prime graph of a finite group must satisfy.
"""

from .families import (
    GroupDescriptor,
    alt_spectrum,
    bundled_spectra,
    enumerate_psl2_orders,
    is_prime_power,
    load_spectrum_file,
    pgl2_spectrum,
    psl2_spectrum,
    sym_spectrum,
)
from .graph import (
    DegenerateComplementError,
    GkGraph,
    SrgParameters,
    build_graph,
    complement,
    complement_srg_parameters,
    complete_multipartite_parts,
    connected_components,
    independence_number,
    independence_number_at,
    induced_subgraph,
    is_k_colorable,
    is_triangle_free,
    is_union_of_cliques,
    srg_parameters,
)
from .kernels import BACKEND
from .numtheory import (
    eta,
    factorize,
    is_prime,
    mult_order,
    nu,
    prime_divisors,
    primitive_prime_divisors,
    zsigmondy_exists,
)
from .spectrum import (
    Spectrum,
    gk_graph_of_spectrum,
    normalize_spectrum,
    spectrum_contains,
)
from .theorems import (
    AnalysisReport,
    MissingVertexTwoError,
    MultipartiteVerdict,
    SrgVerdict,
    analyze,
    check_tau_union_of_cliques,
    classify_srg,
    multipartite_realizability,
    non_neighbors_of_two,
    pgl2_witness,
    solvable_realizable,
)

__version__ = "0.1.0"
