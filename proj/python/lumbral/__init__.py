"""Weighted umbral calculus over exact rationals.

Thin re-export of the compiled core; all rationals cross the boundary as
"p/q" strings so nothing is ever rounded.
"""

try:
    from lumbral._core import (  # type: ignore[import-not-found]
        action,
        assoc,
        coproduct,
        eval_series,
        pair,
        product,
        tau_row,
        verify,
    )
except ImportError:  # in-tree test runs load the module off PYTHONPATH
    from _core import (  # type: ignore[import-not-found]
        action,
        assoc,
        coproduct,
        eval_series,
        pair,
        product,
        tau_row,
        verify,
    )

__all__ = [
    "action",
    "assoc",
    "coproduct",
    "eval_series",
    "pair",
    "product",
    "tau_row",
    "verify",
]
