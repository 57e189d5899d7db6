"""Rational verification of multiplayer graph games.

Decides whether every Nash equilibrium, or every strategy profile
consistent with common knowledge of rationality, satisfies a Muller
specification over a finite game arena, with full witness reporting.
"""

from .arena import Arena, Lasso, inf_set, outcome, validate_arena
from .ckr import CkrMembership, IdipTrace, idip, in_T, in_T_P, is_inferior
from .epistemic import (EpistemicModel, KripkeFrame, canonical_model,
                        common_know, know, make_frame, make_model,
                        mutual_know, rational_all, rational_worlds)
from .formulas import (Formula, buchi_to_muller, eval_muller, parse_formula,
                       winners)
from .problem import Problem, parse_problem, serialize_problem
from .reductions import (QbfInstance, build_aesat_instance,
                         build_easat_instance, build_sat_instance, make_qbf,
                         parse_qbf, qbf_eval)
from .strategy import (PositionalProfile, PositionalStrategy, deviate,
                       enumerate_profiles, enumerate_strategies,
                       has_winning_strategy, is_nash, parse_profile,
                       serialize_profile)
from .verify import Verdict, Witness, sver, vp_nash_pos, vpckr_p_pos, vpckr_pos

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
