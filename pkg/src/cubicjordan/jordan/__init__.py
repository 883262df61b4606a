"""Jordan algebras from structure constants."""

from .algebra import (
    AlgebraSpec,
    GenericMinPoly,
    JordanAlgebra,
    basis_vector,
    certify_min_poly,
    interpolate_min_poly,
    jordan_defect,
    require_rank,
    validate,
    vadd,
    vscale,
    vsub,
    vzero,
)
from .constructions import (
    CompositionAlgebraSpec,
    check_associative,
    composition_algebra,
    direct_product,
    from_associative,
    hermitian_h3,
    opposite,
    spin_factor,
)

__all__ = [
    "AlgebraSpec", "CompositionAlgebraSpec", "GenericMinPoly", "JordanAlgebra",
    "basis_vector", "certify_min_poly", "check_associative", "composition_algebra",
    "direct_product", "from_associative", "hermitian_h3", "interpolate_min_poly",
    "jordan_defect", "opposite", "require_rank", "spin_factor", "vadd", "validate",
    "vscale", "vsub", "vzero",
]
