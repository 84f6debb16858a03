"""Figure rendering for simulator result CSVs.

Couples to the simulator only through its CSV schema; the simulator never
imports this package.
"""

from .reader import NoRowsError, SchemaError, read_rows
from .render import plot_specs, render

__all__ = ["NoRowsError", "SchemaError", "read_rows", "plot_specs", "render"]
