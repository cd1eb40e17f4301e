"""Fair division of indivisible goods under binary-marginal valuations.

Thin wrapper over the compiled extension. Instances travel as JSON (see
``Instance.from_json``) or come from the bundled generators; allocations are
plain lists of good-index lists.
"""

from binfair._core import (
    BudgetError,
    ClassError,
    Instance,
    ParseError,
    ValidationError,
    audit,
    brute_force_nsw_opt,
    brute_force_sw_opt,
    distinguish_probe,
    gen_apx_reduction,
    gen_envy_gap,
    gen_lower_bound_pair,
    gen_random_xos,
    gen_spectrum_instance,
    gmms_threshold,
    is_alpha_gmms,
    is_envy_free,
    is_non_wasteful,
    maximin_share,
    nash_welfare,
    social_welfare,
    solve,
)

__all__ = [
    "BudgetError",
    "ClassError",
    "Instance",
    "ParseError",
    "ValidationError",
    "audit",
    "brute_force_nsw_opt",
    "brute_force_sw_opt",
    "distinguish_probe",
    "gen_apx_reduction",
    "gen_envy_gap",
    "gen_lower_bound_pair",
    "gen_random_xos",
    "gen_spectrum_instance",
    "gmms_threshold",
    "is_alpha_gmms",
    "is_envy_free",
    "is_non_wasteful",
    "maximin_share",
    "nash_welfare",
    "social_welfare",
    "solve",
]
