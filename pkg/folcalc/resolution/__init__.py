# folcalc/resolution/__init__.py
from folcalc.resolution.blowup import BlowupCharts, blow_up, strict_transform_curve
from folcalc.resolution.seidenberg import (
    LeafSingularity,
    ResolutionNode,
    ResolutionTree,
    is_generalized_curve,
    is_nonresonant_extended_gc,
    seidenberg_resolve,
)
