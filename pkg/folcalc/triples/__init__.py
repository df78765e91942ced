# folcalc/triples/__init__.py
from folcalc.triples.projective import (
    GaugeData,
    ProjectiveTriple,
    TripleCheck,
    compose_gauges,
    modify_triple,
    transverse_triple,
    triple_difference,
    verify_triple,
)
from folcalc.triples.riccati import (
    BernoulliCoefficients,
    RiccatiCoefficients,
    RiccatiReduction,
    bernoulli_recognize,
    riccati_canonical_triple,
    riccati_example_gauge,
    riccati_invariant_fibers,
    riccati_recognize,
    riccati_reduce,
)
from folcalc.triples.gauge_ode import ExtensionVerdict, GaugeODECase, PoleCase, gauge_ode_classify
from folcalc.triples.normal_forms import NormalForm, normal_form_library, resonant_kl, saddle_node_closed
