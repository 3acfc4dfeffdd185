"""Python access to the simultaneous domination library."""

import json

from ._sdom import (
    Error,
    Factoring,
    __version__,
    bounds_json,
    generate,
    method_names,
    sd_number,
    solve_json,
    tables_tsv,
)


def solve(factoring, methods=("all",), cap=32, cover_cap=24):
    """Run methods on a factoring and return the report as a dict."""
    return json.loads(solve_json(factoring, list(methods), cap, cover_cap))


def bounds(factoring, gammas=False):
    """Every bound for the factoring's structure, as a dict."""
    return json.loads(bounds_json(factoring, gammas))


def tables():
    """The four bound tables as a list of row dicts."""
    lines = tables_tsv().strip().split("\n")
    header = lines[0].split("\t")
    return [dict(zip(header, line.split("\t"))) for line in lines[1:]]


__all__ = [
    "Error",
    "Factoring",
    "__version__",
    "bounds",
    "generate",
    "method_names",
    "sd_number",
    "solve",
    "tables",
]
