"""Construction expressions and the builders behind them."""

from centrum.constructions.builders import (
    RingBuilder,
    build,
    corner,
    element_by_name,
    quotient,
)
from centrum.constructions.expr import RingExpr, parse, predicted_order, render
from centrum.constructions.tablefile import dump_table, load_table, parse_table, write_table

__all__ = [
    "RingBuilder",
    "RingExpr",
    "build",
    "corner",
    "dump_table",
    "element_by_name",
    "load_table",
    "parse",
    "parse_table",
    "predicted_order",
    "quotient",
    "render",
    "write_table",
]
