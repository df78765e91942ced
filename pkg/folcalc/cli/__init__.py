# CLI package for folcalc
