from .characters import (SPLIT, Character, PatternError, QuadIdentityResult,
                         RankGrowthReport, check_quad_identity, coset_fixed_points,
                         fixed_dimension, perm_character, rank_growth_report,
                         v_etale, v_module)
from .chartable import (EXACT_ORDER_CAP, CharacterTable, SubmoduleVerdict, TableFailure,
                        character_table, submodule_test)
from .groups import (FiniteGroup, GroupTooLarge, alternating, cyclic, cycle_type,
                     dihedral, element_order, from_cycles, parse_cycles, parse_group,
                     symmetric, wreath_mu2)

__all__ = [n for n in dir() if not n.startswith("_")]
