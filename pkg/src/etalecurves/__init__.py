"""Hyperelliptic curves carrying marked divisors of a prescribed etale type.

Exact construction of the curves, their specializations, and the finite-field
and character-theoretic checks used to certify them.
"""
from .constructions import (CapacityError, CurveModel, GenericConstruction, OmegaPoint,
                            construct_C1, construct_C2C3, construct_family,
                            construct_quadratic, diagram_morphisms, genus_bookkeeping)
from .etale_algebra import (AlgebraElement, EtaleAlgebra, QuadElement, QuadExtension,
                            generic_element, quad_generic)
from .specialize import (InadmissibleSpecialization, SpecializedCurve, j_invariant,
                         sample_specializations, specialize_at)
from .sqrt_decomp import SqrtDecomposition, decompose, decompose_generic, recompose

__version__ = "1.0.0"
