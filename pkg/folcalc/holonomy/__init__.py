# folcalc/holonomy/__init__.py
from folcalc.holonomy.mobius import (
    INFINITY,
    MobiusMap,
    fixed_points,
    is_elementary,
    linearize_h1,
    mobius_ops,
)
from folcalc.holonomy.integrator import (
    HolonomyEstimate,
    LoopSpec,
    ResonanceResult,
    holonomy_multiplier,
    resonance_integral,
)
