from .elliptic import CurveFp, SubgroupTable, WeierstrassCurve, reduce_point, subgroup_relations
from .ffield import InseparableModP, PrimeFieldPoly, ddf_cycle_type, primes
from .galois import (CycleTypeEvidence, SimplicityCertificate, certify_galois_Sd,
                     witness_kinds, zarhin_flags)
from .isogeny import DecompositionReport, isogeny_decomposition_check
from .lattice import hnf, intersect, kernel_modulo, lll, short_vectors, smith_invariants
from .sieve import (PrimeData, RelationLattice, SieveResult, curve_classes,
                    independence_sieve, is_relation, marked_classes, prime_data,
                    reduce_points_mod_p, sieve_points)

__all__ = [n for n in dir() if not n.startswith("_")]
