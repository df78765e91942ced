# folcalc/foliation/__init__.py
from folcalc.foliation.foliation import Foliation, SingularPoint, linear_part, singular_locus
from folcalc.foliation.classification import (
    NonDegenerateSubtag,
    SingularityClass,
    SingularityTag,
    classify_linear_part,
    classify_singularity,
)
from folcalc.foliation.indices import IndexSum, cs_index, projective_line_index_sum
from folcalc.foliation.logarithmic import LogarithmicRepresentation, logarithmic_representation
