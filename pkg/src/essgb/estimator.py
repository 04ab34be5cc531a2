"""scikit-learn style front end.

>>> est = VanishingIdeal(prime=5).fit([[0, 0, 0], [1, 2, 0]])
>>> [str(g) for g in est.basis_]
['x3', 'x2+3*x1', 'x1^2+4*x1']
>>> est.transform([[0, 0, 0], [1, 1, 1]]).tolist()
[[0, 0, 0], [1, 4, 0]]
"""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .bm import bm_gb
from .core import PointSet, ess_gb
from .field import PrimeField
from .monomials import TermOrder
from .verify import verify_result

_ALGORITHMS = {"essgb": ess_gb, "bm": bm_gb}


def check_points(X, prime, n_features=None):
    """Validate ``X`` as an integer matrix with entries in ``[0, prime-1]``."""
    X = check_array(X, dtype=None, ensure_all_finite=True)
    if not np.issubdtype(X.dtype, np.integer):
        if not np.all(np.mod(X, 1) == 0):
            raise ValueError("points must have integer coordinates")
        X = X.astype(np.int64)
    if n_features is not None and X.shape[1] != n_features:
        raise ValueError(f"X has {X.shape[1]} features, but the ideal lives in {n_features} variables")
    if X.min() < 0 or X.max() >= prime:
        raise ValueError(f"coordinates must lie in [0, {prime - 1}]")
    return X.astype(np.int64, copy=False)


class VanishingIdeal(TransformerMixin, BaseEstimator):
    """Reduced Groebner basis of the ideal of the training points.

    Parameters
    ----------
    prime : int
        Field size; coordinates are residues mod ``prime``.
    order : {"lex", "grevlex"}
        Term order, with ``x1 < x2 < ... < xn``.
    algorithm : {"essgb", "bm"}
        ``"essgb"`` (linear in the number of variables) or the
        Buchberger-Moeller baseline.  Both give identical results.
    verify : bool
        Run the independent output checks after fitting and raise on failure.

    Attributes
    ----------
    basis_ : tuple of Polynomial
        Reduced Groebner basis, decreasing leading monomials.
    standard_monomials_ : tuple of Monomial
        Increasing under ``order``; one per training point.
    separators_ : tuple of Polynomial
        ``separators_[t]`` is 1 at training point ``t`` and 0 at the others.
    essential_variables_ : tuple of int
        0-based indices of the variables occurring in standard monomials.
    """

    def __init__(self, prime=5, order="lex", algorithm="essgb", verify=False):
        self.prime = prime
        self.order = order
        self.algorithm = algorithm
        self.verify = verify

    def fit(self, X, y=None):
        PrimeField(self.prime)
        order = TermOrder(self.order)
        if self.algorithm not in _ALGORITHMS:
            raise ValueError(f"algorithm must be one of {sorted(_ALGORITHMS)}, got {self.algorithm!r}")
        X = check_points(X, self.prime)
        V = PointSet(X, self.prime)
        result = _ALGORITHMS[self.algorithm](V, order)
        if self.verify:
            report = verify_result(result, V, order)
            if not report.ok:
                raise AssertionError(report.render())
        self.result_ = result
        self.points_ = V
        self.basis_ = result.basis
        self.standard_monomials_ = result.sm
        self.separators_ = result.separators
        self.essential_variables_ = result.essential_vars
        self.n_features_in_ = X.shape[1]
        return self

    def _evaluate(self, polys, X):
        check_is_fitted(self, "result_")
        X = check_points(X, self.prime, self.n_features_in_)
        rows = [tuple(int(v) for v in row) for row in X]
        out = np.empty((len(rows), len(polys)), dtype=np.int64)
        for j, f in enumerate(polys):
            for t, pt in enumerate(rows):
                out[t, j] = f.evaluate(pt)
        return out

    def transform(self, X):
        """Values of the basis polynomials at ``X``; a row is all zero iff
        the point belongs to the training variety."""
        check_is_fitted(self, "result_")
        return self._evaluate(self.basis_, X)

    def separator_values(self, X):
        check_is_fitted(self, "result_")
        return self._evaluate(self.separators_, X)

    def predict(self, X):
        """Index of the training point equal to each row of ``X``, or -1."""
        inside = ~self.transform(X).any(axis=1)
        seps = self.separator_values(X)
        return np.where(inside, seps.argmax(axis=1), -1)
