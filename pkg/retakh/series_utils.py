"""
Exact truncated formal power series.

Series holds the rational coefficients c_0..c_N of a power series in z.
BivarSeries holds, for every power of z, a dense polynomial in the leaf
marking variable u (its u-degree never exceeds the z-degree). Both carry
their truncation order N (inclusive) and refuse to mix orders.

The convolution loops run on Python integers: operands are brought to a
common denominator first and the result is reduced once at the end.
"""
import numbers

from fractions import Fraction
from math import lcm

from retakh.errors import (
    CoefficientIndexError,
    CompositionError,
    DomainError,
    FixedPointDivergenceError,
    NonUnitDivisionError,
    OrderMismatchError,
    UnsupportedBranchError
)

_ZERO = Fraction(0)
_ONE = Fraction(1)
_HALF = Fraction(1, 2)


def _is_scalar(value):
    return isinstance(value, numbers.Rational) and not isinstance(value, bool)


def _to_fraction(value):
    if isinstance(value, str) or _is_scalar(value):
        return Fraction(value)
    raise TypeError('Series coefficients must be exact rationals, got {!r}'.format(value))


def _check_order_value(order):
    if type(order) is not int or order < 0:
        raise DomainError('Truncation order must be a non negative integer, got {!r}'.format(order))


# ########### #
# POLYNOMIALS #
# ########### #

def _trim(poly):
    end = len(poly)
    while end and not poly[end - 1]:
        end -= 1
    return tuple(poly[:end])


def _poly_add(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for k, c in enumerate(q):
        out[k] += c
    return _trim(out)


def _poly_neg(p):
    return tuple(-c for c in p)


def _poly_scale(p, c):
    return _trim([x * c for x in p])


def _poly_value(p, x):
    acc = _ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _poly_derivative_value(p, x):
    acc = _ZERO
    for k in range(len(p) - 1, 0, -1):
        acc = acc * x + k * p[k]
    return acc


def _poly_str(p):
    if not p:
        return '0'
    parts = []
    for k, c in enumerate(p):
        if k == 0:
            parts.append(str(c))
        elif k == 1:
            parts.append('{}*u'.format(c))
        else:
            parts.append('{}*u^{}'.format(c, k))
    return ' + '.join(parts)


# ####### #
# KERNELS #
# ####### #

def _common_denominator(values):
    den = 1
    for c in values:
        if c.denominator != 1:
            den = lcm(den, c.denominator)
    return den


def _as_integers(values, den):
    return [c.numerator * (den // c.denominator) for c in values]


def _rows_denominator(rows):
    den = 1
    for row in rows:
        for c in row:
            if c.denominator != 1:
                den = lcm(den, c.denominator)
    return den


def _accumulate_product(acc, p, q):
    need = len(p) + len(q) - 1
    if len(acc) < need:
        acc.extend([0] * (need - len(acc)))
    for j, x in enumerate(p):
        if x:
            for k, y in enumerate(q):
                acc[j + k] += x * y


def _multiply(a, b, order):
    """ Cauchy product of two coefficient lists, truncated to order.

    :param a: (list) Fraction coefficients
    :param b: (list) Fraction coefficients
    :param order: (int) truncation order
    :return: (list) Fraction coefficients of the product
    """

    da = _common_denominator(a)
    db = _common_denominator(b)
    ia = _as_integers(a, da)
    nonzero_b = [(j, y) for j, y in enumerate(_as_integers(b, db)) if y]

    out = [0] * (order + 1)
    for i, x in enumerate(ia):
        if not x:
            continue
        for j, y in nonzero_b:
            if i + j > order:
                break
            out[i + j] += x * y

    den = da * db
    return [Fraction(c, den) for c in out]


def _divide(a, b, order):
    """ Long division a / b of coefficient lists; b[0] must be nonzero.

    The quotient computed so far is kept as integers over a running common
    denominator, which only grows when a new coefficient needs it.

    :param a: (list) Fraction coefficients of the dividend
    :param b: (list) Fraction coefficients of the divisor
    :param order: (int) truncation order
    :return: (list) Fraction coefficients of the quotient
    """

    head = b[0]
    db = _common_denominator(b)
    tail = [(i, y) for i, y in enumerate(_as_integers(b, db)) if i and y]

    den = 1
    scaled = []
    quotient = []
    for n in range(order + 1):
        acc = 0
        for i, y in tail:
            if i > n:
                break
            acc += y * scaled[n - i]

        q = (a[n] - Fraction(acc, db * den)) / head
        quotient.append(q)

        if den % q.denominator:
            factor = lcm(den, q.denominator) // den
            scaled = [s * factor for s in scaled]
            den *= factor
        scaled.append(q.numerator * (den // q.denominator))

    return quotient


def _multiply_rows(a, b, order):
    """ Cauchy product of two lists of u-polynomials, truncated to order. """

    da = _rows_denominator(a)
    db = _rows_denominator(b)
    ia = [_as_integers(row, da) for row in a]
    nonzero_b = [(j, row) for j, row in enumerate(b) if row]
    nonzero_b = [(j, _as_integers(row, db)) for j, row in nonzero_b]

    den = da * db
    out = []
    for n in range(order + 1):
        acc = []
        for j, row in nonzero_b:
            if j > n:
                break
            left = ia[n - j]
            if left:
                _accumulate_product(acc, left, row)
        out.append(_trim([Fraction(c, den) for c in acc]))

    return out


def _divide_rows(a, b, order):
    """ Long division of lists of u-polynomials; b[0] must be a nonzero constant. """

    head = b[0][0]
    db = _rows_denominator(b)
    tail = [(i, _as_integers(row, db)) for i, row in enumerate(b) if i and row]

    den = 1
    scaled = []
    quotient = []
    for n in range(order + 1):
        acc = []
        for i, row in tail:
            if i > n:
                break
            right = scaled[n - i]
            if right:
                _accumulate_product(acc, row, right)

        total = db * den
        numer = a[n]
        width = max(len(numer), len(acc))
        q = _trim([
            ((numer[k] if k < len(numer) else _ZERO) -
             Fraction(acc[k] if k < len(acc) else 0, total)) / head
            for k in range(width)
        ])
        quotient.append(q)

        need = _common_denominator(q)
        if den % need:
            factor = lcm(den, need) // den
            scaled = [[s * factor for s in row] for row in scaled]
            den *= factor
        scaled.append(_as_integers(q, den))

    return quotient


# ############ #
# SERIES TYPES #
# ############ #

class _TruncatedSeries(object):
    """ Arithmetic shared by Series and BivarSeries.

    Subclasses describe a single coefficient (a rational, or a polynomial in
    u) through the _term/_add_terms/... hooks and provide the product and
    quotient kernels; everything else is written once here.
    """

    __slots__ = ('order', '_terms')

    _ZERO_TERM = None

    @classmethod
    def _wrap(cls, terms):
        obj = object.__new__(cls)
        obj.order = len(terms) - 1
        obj._terms = tuple(terms)
        return obj

    # Constructors

    @classmethod
    def zero(cls, order):
        _check_order_value(order)
        return cls._wrap([cls._ZERO_TERM] * (order + 1))

    @classmethod
    def constant(cls, value, order):
        _check_order_value(order)
        terms = [cls._ZERO_TERM] * (order + 1)
        terms[0] = cls._term(value)
        return cls._wrap(terms)

    @classmethod
    def one(cls, order):
        return cls.constant(1, order)

    @classmethod
    def variable(cls, order):
        """ The series z at the given order (zero at order 0). """
        _check_order_value(order)
        terms = [cls._ZERO_TERM] * (order + 1)
        if order >= 1:
            terms[1] = cls._term(1)
        return cls._wrap(terms)

    # Accessors

    def coeff(self, n):
        """ Coefficient of z^n.

        :param n: (int) index, 0 <= n <= order
        :return: (Fraction or tuple) coefficient
        """

        if type(n) is not int or not 0 <= n <= self.order:
            raise CoefficientIndexError(
                'Coefficient index {!r} outside 0..{}'.format(n, self.order)
            )
        return self._terms[n]

    def __getitem__(self, n):
        return self.coeff(n)

    def valuation(self):
        """ Index of the first nonzero coefficient, None for the zero series. """
        for n, term in enumerate(self._terms):
            if term:
                return n
        return None

    def truncate(self, order):
        """ Drop coefficients above order, or zero-pad up to it. """
        _check_order_value(order)
        if order <= self.order:
            return self._wrap(self._terms[:order + 1])
        return self._wrap(self._terms + (self._ZERO_TERM,) * (order - self.order))

    def shift(self, k):
        """ Multiply by z^k at the same order; a negative k divides by z^-k.

        Dividing requires the k lowest coefficients to vanish and lowers the
        order by k.
        """

        if k >= 0:
            if k > self.order:
                return self.zero(self.order)
            return self._wrap((self._ZERO_TERM,) * k + self._terms[:self.order + 1 - k])

        low = -k
        if low > self.order:
            raise DomainError('Cannot divide an order {} series by z^{}'.format(self.order, low))
        if any(self._terms[:low]):
            raise DomainError('Cannot divide by z^{}: low coefficients do not vanish'.format(low))
        return type(self)(self._terms[low:])

    # Arithmetic

    def _coerce(self, other):
        if isinstance(other, type(self)):
            if other.order != self.order:
                raise OrderMismatchError(
                    'Series orders differ: {} and {}'.format(self.order, other.order)
                )
            return other
        if _is_scalar(other):
            return self.constant(other, self.order)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._wrap([self._add_terms(x, y) for x, y in zip(self._terms, other._terms)])

    __radd__ = __add__

    def __neg__(self):
        return self._wrap([self._neg_term(x) for x in self._terms])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, factor):
        """ Multiply every coefficient by an exact rational. """
        factor = _to_fraction(factor)
        return self._wrap([self._scale_term(x, factor) for x in self._terms])

    def __mul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._wrap(self._mul_kernel(self._terms, other._terms, self.order))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            if other == 0:
                raise NonUnitDivisionError('Division of a series by zero')
            return self.scale(1 / Fraction(other))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self._is_unit(other._terms[0]):
            raise NonUnitDivisionError(
                'Divisor constant term {!r} is not invertible'.format(other._terms[0])
            )
        return self._wrap(self._div_kernel(self._terms, other._terms, self.order))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent):
        if type(exponent) is not int or exponent < 0:
            raise DomainError('Series powers need a non negative integer exponent, got {!r}'.format(exponent))

        result = self.one(self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def inverse(self):
        return self.one(self.order) / self

    def sqrt(self):
        """ Square root with constant term 1.

        Newton steps s <- (s + a/s)/2 on growing truncations; every step
        doubles the number of correct coefficients.
        """

        if not self._is_one(self._terms[0]):
            raise UnsupportedBranchError(
                'Square root needs constant term 1, got {!r}'.format(self._terms[0])
            )

        root = self.one(0)
        known = 0
        while known < self.order:
            known = min(2 * known + 1, self.order)
            target = self.truncate(known)
            root = root.truncate(known)
            root = (root + target / root).scale(_HALF)
        return root

    # Comparison

    def __eq__(self, other):
        if not isinstance(other, _TruncatedSeries):
            return NotImplemented
        return type(self) is type(other) and self.order == other.order and self._terms == other._terms

    def __hash__(self):
        return hash((type(self).__name__, self.order, self._terms))


class Series(_TruncatedSeries):
    """ Truncated power series c_0 + c_1*z + ... + c_N*z^N over the rationals.

    :param coeffs: (iterable) int, Fraction or 'p/q' coefficients from c_0 upwards
    :param order: (int) truncation order, missing coefficients are zero
    """

    __slots__ = ()

    _ZERO_TERM = _ZERO

    def __init__(self, coeffs, order=None):
        coeffs = [_to_fraction(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        _check_order_value(order)
        if len(coeffs) > order + 1:
            raise DomainError('{} coefficients do not fit order {}'.format(len(coeffs), order))

        self.order = order
        self._terms = tuple(coeffs) + (_ZERO,) * (order + 1 - len(coeffs))

    _term = staticmethod(_to_fraction)
    _mul_kernel = staticmethod(_multiply)
    _div_kernel = staticmethod(_divide)

    @staticmethod
    def _add_terms(x, y):
        return x + y

    @staticmethod
    def _neg_term(x):
        return -x

    @staticmethod
    def _scale_term(x, c):
        return x * c

    @staticmethod
    def _is_unit(x):
        return x != 0

    @staticmethod
    def _is_one(x):
        return x == 1

    @classmethod
    def monomial(cls, degree, order, coeff=1):
        """ coeff * z^degree at the given order (zero if degree > order). """
        series = cls.zero(order)
        if degree < 0:
            raise DomainError('Monomial degree must be non negative, got {}'.format(degree))
        if degree > order:
            return series
        terms = list(series._terms)
        terms[degree] = _to_fraction(coeff)
        return cls._wrap(terms)

    @property
    def coeffs(self):
        return self._terms

    def compose(self, inner):
        """ self(inner(z)) by Horner evaluation.

        Step i of the Horner scheme only feeds coefficients up to N - i,
        so the intermediate results are kept at that order.

        :param inner: (Series) series with zero constant term, same order
        :return: (Series) composition
        """

        if not isinstance(inner, Series):
            raise TypeError('Can only compose with a Series, got {!r}'.format(type(inner)))
        inner = self._coerce(inner)
        if inner._terms[0] != 0:
            raise CompositionError(
                'Inner series has nonzero constant term {}'.format(inner._terms[0])
            )

        top = self.order
        while top and not self._terms[top]:
            top -= 1

        order = self.order
        result = Series.constant(self._terms[top], order - top)
        for i in range(top - 1, -1, -1):
            width = order - i
            result = inner.truncate(width) * result.truncate(width) + self._terms[i]
        return result

    def __str__(self):
        parts = []
        for n, c in enumerate(self._terms):
            if n == 0:
                parts.append(str(c))
            elif n == 1:
                parts.append('{}*z'.format(c))
            else:
                parts.append('{}*z^{}'.format(c, n))
        return ' + '.join(parts)

    def __repr__(self):
        return 'Series({!r}, order={})'.format([str(c) for c in self._terms], self.order)


class BivarSeries(_TruncatedSeries):
    """ Truncated series in z whose coefficients are polynomials in u.

    :param rows: (iterable) one coefficient sequence (u^0 upwards) per power of z
    :param order: (int) truncation order, missing rows are zero
    """

    __slots__ = ()

    _ZERO_TERM = ()

    def __init__(self, rows, order=None):
        rows = [_trim([_to_fraction(c) for c in row]) for row in rows]
        if order is None:
            order = len(rows) - 1
        _check_order_value(order)
        if len(rows) > order + 1:
            raise DomainError('{} rows do not fit order {}'.format(len(rows), order))
        for n, row in enumerate(rows):
            if len(row) - 1 > n:
                raise DomainError('u-degree {} exceeds z-degree {}'.format(len(row) - 1, n))

        self.order = order
        self._terms = tuple(rows) + ((),) * (order + 1 - len(rows))

    _mul_kernel = staticmethod(_multiply_rows)
    _div_kernel = staticmethod(_divide_rows)
    _add_terms = staticmethod(_poly_add)
    _neg_term = staticmethod(_poly_neg)
    _scale_term = staticmethod(_poly_scale)

    @staticmethod
    def _term(value):
        return _trim([_to_fraction(value)])

    @staticmethod
    def _is_unit(x):
        return len(x) == 1

    @staticmethod
    def _is_one(x):
        return x == (_ONE,)

    @classmethod
    def monomial(cls, z_degree, u_degree, order, coeff=1):
        """ coeff * z^z_degree * u^u_degree at the given order. """
        if not 0 <= u_degree <= z_degree:
            raise DomainError('Need 0 <= u-degree <= z-degree, got {} and {}'.format(u_degree, z_degree))
        series = cls.zero(order)
        if z_degree > order:
            return series
        terms = list(series._terms)
        terms[z_degree] = _trim([_ZERO] * u_degree + [_to_fraction(coeff)])
        return cls._wrap(terms)

    @classmethod
    def marked_variable(cls, order):
        """ The series z*u (a node that is also a leaf). """
        return cls.monomial(1, 1, order)

    @classmethod
    def from_series(cls, series):
        """ Lift a univariate series (constant in u). """
        return cls._wrap([_trim([c]) for c in series.coeffs])

    @property
    def rows(self):
        return self._terms

    def evaluate(self, u0):
        """ Specialize u = u0.

        :param u0: (int or Fraction) value of u
        :return: (Series) univariate series of the same order
        """
        u0 = _to_fraction(u0)
        return Series._wrap([_poly_value(row, u0) for row in self._terms])

    def derivative_at(self, u0):
        """ Derivative with respect to u, specialized at u = u0.

        :param u0: (int or Fraction) value of u
        :return: (Series) univariate series of the same order
        """
        u0 = _to_fraction(u0)
        return Series._wrap([_poly_derivative_value(row, u0) for row in self._terms])

    def __str__(self):
        parts = []
        for n, row in enumerate(self._terms):
            if n == 0:
                parts.append('({})'.format(_poly_str(row)))
            elif n == 1:
                parts.append('({})*z'.format(_poly_str(row)))
            else:
                parts.append('({})*z^{}'.format(_poly_str(row), n))
        return ' + '.join(parts)

    def __repr__(self):
        return 'BivarSeries({!r}, order={})'.format(
            [[str(c) for c in row] for row in self._terms], self.order
        )


# ################## #
# FUNCTIONAL VERSION #
# ################## #

def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def div(a, b):
    return a / b


def sqrt(a):
    return a.sqrt()


def compose(outer, inner):
    return outer.compose(inner)


def coeff(s, n):
    return s.coeff(n)


def solve_fixed_point(update_map, order, start=None):
    """ Solve X = update_map(X) to the given truncation order.

    The map must contract: from an argument that is right up to z^d it
    must return a result that is right up to z^(d+1). The iterate is
    padded by one order before every application, so the map is applied
    exactly order + 1 times and early applications run on short series.
    Update maps should build their constants at the order of their argument.

    :param update_map: (callable) series -> series, or tuple -> tuple for joint systems
    :param order: (int) target truncation order
    :param start: (Series, BivarSeries or tuple) initial iterate, zero Series if None
    :return: (Series, BivarSeries or tuple) the solution, shaped like start
    """

    _check_order_value(order)
    if start is None:
        start = Series.zero(0)

    joint = isinstance(start, tuple)
    state = tuple(s.truncate(0) for s in (start if joint else (start,)))

    for working in range(order + 1):
        guess = tuple(s.truncate(working) for s in state)
        image = tuple(update_map(guess)) if joint else (update_map(guess[0]),)

        if len(image) != len(state):
            raise DomainError(
                'Update map returned {} components, expected {}'.format(len(image), len(state))
            )
        for old, new in zip(state, image):
            if new.order != working:
                raise OrderMismatchError(
                    'Update map changed the order from {} to {}'.format(working, new.order)
                )
            if working and new.truncate(working - 1) != old:
                raise FixedPointDivergenceError(
                    'Settled coefficients changed at order {}: the update map does not contract'.format(working)
                )
        state = image

    return state if joint else state[0]
