from .geometry import DomainGeometry
from .quadrature import QuadratureRule
from .basis import (
    SpectralBasis, build_basis, ModalVector, modal_norms, modal_norm_squares,
    project)
from .assembly import (
    CoefficientSet, ModalForcing, AssembledForm, FormAssembler, assemble,
    EllipticityReport, check_ellipticity, garding_constants,
    poincare_constant, continuity_constant)
