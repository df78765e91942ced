"""
folcalc: cálculo exacto con foliaciones holomorfas polinomiales en el plano
"""

__version__ = "0.1.0"

from folcalc.config import Config
from folcalc.errors import FolcalcError
from folcalc.foliation.foliation import Foliation
from folcalc.parsing.expression import parse_form, parse_function

__all__ = ["Config", "Foliation", "FolcalcError", "parse_form", "parse_function", "__version__"]
