# folcalc/forms/__init__.py
from folcalc.forms.calculus import (
    OneForm,
    RationalMap,
    TwoForm,
    VectorField,
    contract,
    differential,
    dual_vector_field,
    exterior_derivative,
    format_one_form,
    is_closed,
    jacobian_determinant,
    pullback,
    pullback_two_form,
    same_foliation,
    saturate,
    wedge,
)
