"""Word-level minor calculus for positive and strongly quasipositive braids."""

from ._kernels import BACKEND_NAME
from .braidword import (
    Band,
    BandWord,
    BraidError,
    Permutation,
    PositiveWord,
    SignedLetter,
    closure_permutation,
    delete_letters,
    delta_power,
    euler_characteristic,
    expand_band,
    format_braid,
    full_twist,
    is_nonsplit,
    stabilize_to,
)
from .minors import (
    ContractError,
    ReductionReport,
    SummandTuple,
    TwistReport,
    choose_residue,
    complete_tuple,
    decompose_connected_sum,
    full_twist_certificate,
    minimal_modulus,
    r_minor_search,
    reduce_mod,
    twist_pair_search,
    twist_root_exponent,
)
from .parser import BraidSyntaxError, parse_braid, parse_braid_lines
from .surface import (
    LayoutOptions,
    SurfaceInvariants,
    SurfaceModel,
    build_surface,
    render_svg,
    surface_invariants,
)
from .wqo import (
    Embedding,
    PairReport,
    TupleEmbedding,
    find_comparable_pair,
    subword_embeds,
    tuple_embeds,
    verify_embedding,
    verify_tuple_embedding,
)

__version__ = "0.1.0"
