"""Forward-mode dual numbers with nesting support.

A :class:`Dual` carries a primal part ``re`` and a tangent part ``eps``.  Both
parts may be Python scalars, numpy arrays or other duals, so matrix-valued
functions (4x4 spinors) differentiate the same way scalar ones do, and higher
derivatives come from nesting.

Every differentiation opens a fresh *tag*.  Duals created later always carry a
larger tag and sit on the outside of the nesting, which is what keeps nested
derivatives free of perturbation confusion::

    >>> derivative(lambda x: x * derivative(lambda y: x + y, 1.0), 1.0)
    1.0

Numpy ufuncs dispatch to duals through ``__array_ufunc__``, so field functions
can be written with plain ``np.sin``/``np.exp`` and still be differentiated.
"""

from __future__ import annotations

import itertools
from typing import Any, Callable, Sequence

import numpy as np

_TAGS = itertools.count(1)


def new_tag() -> int:
    return next(_TAGS)


def _tag_of(x: Any) -> int:
    return x.tag if isinstance(x, Dual) else 0


def _parts(x: Any, tag: int):
    """Split ``x`` into (primal, tangent) at ``tag``; tangent is None if constant."""
    if isinstance(x, Dual) and x.tag == tag:
        return x.re, x.eps
    return x, None


def _add_opt(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return a + b


class Dual:
    """First-order dual number ``re + eps * e_tag`` with ``e_tag**2 == 0``."""

    __slots__ = ("re", "eps", "tag")

    def __init__(self, re: Any, eps: Any, tag: int):
        self.re = re
        self.eps = eps
        self.tag = tag

    # numpy must hand mixed expressions back to us instead of building
    # object arrays.
    def __array_ufunc__(self, ufunc, method, *inputs, **kwargs):
        if method != "__call__" or kwargs:
            return NotImplemented
        handler = _UFUNCS.get(ufunc)
        if handler is None:
            return NotImplemented
        return handler(*inputs)

    def __repr__(self) -> str:
        return f"Dual({self.re!r}, {self.eps!r}, tag={self.tag})"

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        return _add(self, other)

    def __radd__(self, other):
        return _add(other, self)

    def __sub__(self, other):
        return _sub(self, other)

    def __rsub__(self, other):
        return _sub(other, self)

    def __mul__(self, other):
        return _mul(self, other)

    def __rmul__(self, other):
        return _mul(other, self)

    def __truediv__(self, other):
        return _div(self, other)

    def __rtruediv__(self, other):
        return _div(other, self)

    def __matmul__(self, other):
        return _matmul(self, other)

    def __rmatmul__(self, other):
        return _matmul(other, self)

    def __pow__(self, other):
        return _pow(self, other)

    def __rpow__(self, other):
        return _pow(other, self)

    def __neg__(self):
        return Dual(-self.re, -self.eps, self.tag)

    def __pos__(self):
        return self

    # Comparisons look at primal values only; they exist for domain guards.
    def __lt__(self, other):
        return primal(self) < primal(other)

    def __le__(self, other):
        return primal(self) <= primal(other)

    def __gt__(self, other):
        return primal(self) > primal(other)

    def __ge__(self, other):
        return primal(self) >= primal(other)

    def __float__(self):
        raise TypeError("refusing to drop the tangent of a Dual; use primal()")

    def __complex__(self):
        raise TypeError("refusing to drop the tangent of a Dual; use primal()")

    def __array__(self, dtype=None, copy=None):
        # np.array([...duals]) would build an object array and mix tags
        raise TypeError("Dual cannot become a numpy array; use dual.stack()")

    # -- array protocol -----------------------------------------------------
    @property
    def real(self):
        return Dual(np.real(self.re), np.real(self.eps), self.tag)

    @property
    def imag(self):
        return Dual(np.imag(self.re), np.imag(self.eps), self.tag)

    def conj(self):
        return Dual(np.conjugate(self.re), np.conjugate(self.eps), self.tag)

    conjugate = conj

    @property
    def T(self):
        return Dual(_transpose(self.re), _transpose(self.eps), self.tag)

    @property
    def shape(self):
        return np.shape(primal(self))

    def __len__(self):
        return len(primal(self))

    def __getitem__(self, key):
        return Dual(self.re[key], self.eps[key], self.tag)

    def trace(self):
        return Dual(trace(self.re), trace(self.eps), self.tag)

    def sum(self, axis=None):
        return Dual(_sum(self.re, axis), _sum(self.eps, axis), self.tag)


def _transpose(x):
    return x.T if hasattr(x, "T") else x


def _sum(x, axis):
    return x.sum(axis=axis) if isinstance(x, Dual) else np.sum(x, axis=axis)


def trace(m):
    if isinstance(m, Dual):
        return m.trace()
    return np.trace(m)


# -- binary kernels ---------------------------------------------------------

def _add(a, b):
    tag = max(_tag_of(a), _tag_of(b))
    ar, ae = _parts(a, tag)
    br, be = _parts(b, tag)
    return Dual(ar + br, _add_opt(ae, be), tag)


def _sub(a, b):
    tag = max(_tag_of(a), _tag_of(b))
    ar, ae = _parts(a, tag)
    br, be = _parts(b, tag)
    return Dual(ar - br, _add_opt(ae, None if be is None else -be), tag)


def _mul(a, b):
    tag = max(_tag_of(a), _tag_of(b))
    ar, ae = _parts(a, tag)
    br, be = _parts(b, tag)
    eps = _add_opt(None if be is None else ar * be, None if ae is None else ae * br)
    return Dual(ar * br, eps, tag)


def _div(a, b):
    tag = max(_tag_of(a), _tag_of(b))
    ar, ae = _parts(a, tag)
    br, be = _parts(b, tag)
    re = ar / br
    eps = _add_opt(None if ae is None else ae / br,
                   None if be is None else -(re * be) / br)
    return Dual(re, eps, tag)


def _matmul(a, b):
    tag = max(_tag_of(a), _tag_of(b))
    ar, ae = _parts(a, tag)
    br, be = _parts(b, tag)
    eps = _add_opt(None if be is None else ar @ be, None if ae is None else ae @ br)
    return Dual(ar @ br, eps, tag)


def _pow(a, b):
    tag = max(_tag_of(a), _tag_of(b))
    ar, ae = _parts(a, tag)
    br, be = _parts(b, tag)
    if be is not None:
        return np.exp(b * np.log(a))
    return Dual(ar ** br, br * ar ** (br - 1) * ae, tag)


def _unary(fn, dfn):
    def apply(x):
        return Dual(fn(x.re), dfn(x.re) * x.eps, x.tag)
    return apply


def _absolute(x):
    re = x.re
    mag = np.abs(re)
    if np.iscomplexobj(primal(re)):
        return Dual(mag, np.real(np.conjugate(re) * x.eps) / mag, x.tag)
    return Dual(mag, np.sign(primal(re)) * x.eps, x.tag)


def _arctan2(y, x):
    tag = max(_tag_of(y), _tag_of(x))
    yr, ye = _parts(y, tag)
    xr, xe = _parts(x, tag)
    den = xr * xr + yr * yr
    eps = _add_opt(None if ye is None else xr * ye / den,
                   None if xe is None else -yr * xe / den)
    return Dual(np.arctan2(yr, xr), eps, tag)


_UFUNCS: dict = {
    np.add: _add,
    np.subtract: _sub,
    np.multiply: _mul,
    np.true_divide: _div,
    np.matmul: _matmul,
    np.power: _pow,
    np.arctan2: _arctan2,
    np.negative: lambda x: -x,
    np.positive: lambda x: x,
    np.conjugate: lambda x: x.conj(),
    np.absolute: _absolute,
    np.exp: _unary(np.exp, np.exp),
    np.log: _unary(np.log, lambda r: 1.0 / r),
    np.sqrt: _unary(np.sqrt, lambda r: 0.5 / np.sqrt(r)),
    np.square: lambda x: x * x,
    np.reciprocal: lambda x: 1.0 / x,
    np.sin: _unary(np.sin, np.cos),
    np.cos: _unary(np.cos, lambda r: -np.sin(r)),
    np.tan: _unary(np.tan, lambda r: 1.0 / np.cos(r) ** 2),
    np.arctan: _unary(np.arctan, lambda r: 1.0 / (1.0 + r * r)),
    np.sinh: _unary(np.sinh, np.cosh),
    np.cosh: _unary(np.cosh, np.sinh),
    np.tanh: _unary(np.tanh, lambda r: 1.0 - np.tanh(r) ** 2),
}


# -- public helpers ---------------------------------------------------------

def primal(x: Any) -> Any:
    """Strip every level of dual nesting."""
    while isinstance(x, Dual):
        x = x.re
    return x


def is_dual(x: Any) -> bool:
    return isinstance(x, Dual)


def zero_like(x: Any) -> Any:
    p = primal(x)
    if isinstance(p, np.ndarray):
        return np.zeros_like(p)
    return 0.0 * p


def tangent(y: Any, tag: int) -> Any:
    """Coefficient of ``e_tag`` in ``y`` (zero when ``y`` does not depend on it)."""
    if isinstance(y, Dual) and y.tag == tag:
        return y.eps
    return zero_like(y)


def value_at(y: Any, tag: int) -> Any:
    if isinstance(y, Dual) and y.tag == tag:
        return y.re
    return y


def stack(items: Sequence[Any]) -> Any:
    """``np.array(items)`` that tolerates dual entries."""
    tag = max((_tag_of(v) for v in items), default=0)
    if tag == 0:
        return np.array(items)
    res, eps = [], []
    for v in items:
        r, e = _parts(v, tag)
        res.append(r)
        eps.append(zero_like(r) if e is None else e)
    return Dual(stack(res), stack(eps), tag)


def derivative(f: Callable[[Any], Any], x: Any) -> Any:
    """d f / dx at ``x``; ``x`` may itself be a dual from an outer derivative."""
    tag = new_tag()
    return tangent(f(Dual(x, 1.0, tag)), tag)


def value_and_derivative(f: Callable[[Any], Any], x: Any):
    tag = new_tag()
    y = f(Dual(x, 1.0, tag))
    return value_at(y, tag), tangent(y, tag)


def partials(f: Callable[[Sequence[Any]], Any], point: Sequence[Any]):
    """Value of ``f`` at ``point`` and its partial derivative in each coordinate.

    ``f`` receives a list of coordinates.  One forward pass is spent per
    coordinate; the value is taken from the first pass.
    """
    point = list(point)
    value = None
    grads = []
    for k in range(len(point)):
        tag = new_tag()
        shifted = point.copy()
        shifted[k] = Dual(point[k], 1.0, tag)
        y = f(shifted)
        if value is None:
            value = value_at(y, tag)
        grads.append(tangent(y, tag))
    return value, grads


def second_derivative(f: Callable[[Any], Any], x: Any) -> Any:
    return derivative(lambda s: derivative(f, s), x)


def nth_derivative(f: Callable[[Any], Any], x: Any, n: int) -> Any:
    if n == 0:
        return f(x)
    return derivative(lambda s: nth_derivative(f, s, n - 1), x)
