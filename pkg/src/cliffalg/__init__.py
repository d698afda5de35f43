"""Clifford algebras Cl(p, q): blade products, multivectors, division algebras,
matrix representations and the real classification."""

from .blades import (
    Blade,
    OrderingConvention,
    SignedBlade,
    Signature,
    blade_product,
    grade_lex_permutation,
    index_to_set,
    make_signature,
    permutation_orientation,
    set_to_index,
    star,
)
from .classification import AlgebraDescriptor, classify, descriptor_real_dimension
from .division import (
    AxisAngle,
    Octonion,
    Quaternion,
    oct_conj_norm_inv,
    oct_mul,
    phi0_embed,
    phi1_embed,
    quat_conj_norm_inv,
    quat_exp,
    quat_mul,
    quat_rotate,
)
from .multivector import (
    Multivector,
    embed_vector,
    geometric_product,
    grade_project,
    polarize,
    product_table,
    reindex,
)
from .representations import builtin, extend_to_blades, verify

__version__ = "0.1.0"
