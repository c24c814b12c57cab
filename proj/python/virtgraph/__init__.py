from ._core import (
    Diagram,
    MapError,
    cellular_embedding_poly,
    classify,
    flow_poly,
    golden,
    gram_det,
    obstruction,
    run_cli,
    s_poly,
    w_sl,
    w_so,
    yamada,
)

__all__ = [
    "Diagram",
    "MapError",
    "cellular_embedding_poly",
    "classify",
    "flow_poly",
    "golden",
    "gram_det",
    "obstruction",
    "run_cli",
    "s_poly",
    "w_sl",
    "w_so",
    "yamada",
]
