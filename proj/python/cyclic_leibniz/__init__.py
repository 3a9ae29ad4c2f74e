"""Exact arithmetic in the cyclic left Leibniz algebra.

Elements are written ``2*a1 - 1/2*a4``; endomorphisms and derivations are
determined by the image of ``a1`` and written ``endo [g1, g2, ...]`` and
``der [g1, g2, ...]``. Fields are ``"Q"`` or ``"GF<p>"``.
"""

from ._core import (
    Derivation,
    Element,
    Endo,
    EndoClass,
    Field,
    LeibnizError,
    MatrixWindow,
    Polynomial,
    Scalar,
    bracket,
    centers_window,
    classify,
    compose,
    conjugate_by_diagonal,
    decompose,
    factorize,
    gamma_window,
    inverse,
    leibniz_defect,
    lie_bracket,
    matrix_of,
    oracle_check_der,
    oracle_check_endo,
    phi,
    phi_inverse,
    solve_commutator,
    verify,
)

__all__ = [
    "Derivation",
    "Element",
    "Endo",
    "EndoClass",
    "Field",
    "LeibnizError",
    "MatrixWindow",
    "Polynomial",
    "Scalar",
    "bracket",
    "centers_window",
    "classify",
    "compose",
    "conjugate_by_diagonal",
    "decompose",
    "factorize",
    "gamma_window",
    "inverse",
    "leibniz_defect",
    "lie_bracket",
    "matrix_of",
    "oracle_check_der",
    "oracle_check_endo",
    "phi",
    "phi_inverse",
    "solve_commutator",
    "verify",
]
