# folcalc/parsing/__init__.py
from folcalc.parsing.expression import (
    ExpressionParser,
    parse_expression,
    parse_form,
    parse_function,
    parse_polynomial,
)
from folcalc.parsing.document import InputDocument, load_document, parse_document
