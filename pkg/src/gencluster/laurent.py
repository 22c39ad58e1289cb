r"""Sparse Laurent polynomials in the cluster variables.

``LaurentPolynomial`` models elements of ``ZP[x_1^{\pm1}, ..., x_n^{\pm1}]``
where ZP is the group ring of a tropical semifield (see ``semifield``).
Terms are stored as a dict from integer exponent tuples to nonzero
``GroupRingElement`` coefficients.

Conventions used throughout the package:

* variables are named ``x1 ... xn`` in rendered output;
* the canonical text rendering lists terms in descending graded-lex
  order of the x-exponent and is stable, so equal polynomials always
  render identically (exchange-graph deduplication relies on this);
* a denominator vector is a plain tuple ``d`` with
  ``d[j] = -min_j(exponents)``, so the initial variable ``xj`` itself
  has ``d = -e_j`` and every variable with no ``xj`` dependence has
  ``d[j] = 0``.

Exact division shifts both operands into the polynomial cone and then
cancels graded-lex leading terms; the Laurent phenomenon is what makes
this the workhorse of seed mutation, and ``NotLaurentError`` is the
honest failure mode.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionError, EvaluationError, NotLaurentError
from .semifield import (GroupRingElement, SemifieldElement, TropicalSemifield,
                        _check_same_semifield, _grlex_key)


def _coerce_coeff(semifield, c):
    if isinstance(c, GroupRingElement):
        return c
    if isinstance(c, SemifieldElement):
        return c.as_group_ring()
    if isinstance(c, int):
        return GroupRingElement.from_int(semifield, c)
    raise TypeError("cannot use %r as a coefficient" % (c,))


class LaurentPolynomial:
    """Element of the Laurent ring over ZP in ``rank`` cluster variables."""

    __slots__ = ("rank", "semifield", "_terms", "_hash")

    def __init__(self, rank: int, semifield: TropicalSemifield, terms: dict):
        self.rank = int(rank)
        self.semifield = semifield
        clean = {}
        for exps, c in terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.rank:
                raise DimensionError("x-exponent tuple of wrong length")
            c = _coerce_coeff(semifield, c)
            if c.semifield != semifield:
                raise DimensionError("coefficient over the wrong semifield")
            if not c.is_zero():
                clean[exps] = c
        self._terms = clean
        self._hash = None

    # ---- constructors ----

    @classmethod
    def zero(cls, rank, semifield):
        return cls(rank, semifield, {})

    @classmethod
    def constant(cls, rank, semifield, c):
        return cls(rank, semifield, {(0,) * rank: c})

    @classmethod
    def one(cls, rank, semifield):
        return cls.constant(rank, semifield, 1)

    @classmethod
    def variable(cls, rank, semifield, i):
        exps = [0] * rank
        exps[i] = 1
        return cls(rank, semifield, {tuple(exps): 1})

    @classmethod
    def monomial(cls, rank, semifield, exps, coeff=1):
        return cls(rank, semifield, {tuple(exps): coeff})

    # ---- inspection ----

    def terms(self):
        return self._terms.items()

    def nterms(self):
        return len(self._terms)

    def is_zero(self):
        return not self._terms

    def is_one(self):
        return (len(self._terms) == 1
                and self._terms.get((0,) * self.rank, None) is not None
                and self._terms[(0,) * self.rank].is_one())

    def is_monomial(self):
        return len(self._terms) == 1

    def coefficient(self, exps) -> GroupRingElement:
        return self._terms.get(tuple(exps), self.semifield.group_ring_zero())

    # ---- ring operations ----

    def _like(self, other):
        if not isinstance(other, LaurentPolynomial):
            raise TypeError("expected a LaurentPolynomial")
        if other.rank != self.rank:
            raise DimensionError("mixed ranks: %d vs %d" % (self.rank, other.rank))
        _check_same_semifield(self, other)

    def __add__(self, other):
        if isinstance(other, (int, GroupRingElement, SemifieldElement)):
            other = LaurentPolynomial.constant(self.rank, self.semifield, other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        self._like(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        return LaurentPolynomial(self.rank, self.semifield, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(self.rank, self.semifield,
                                 {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, GroupRingElement, SemifieldElement)):
            other = LaurentPolynomial.constant(self.rank, self.semifield, other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, GroupRingElement, SemifieldElement)):
            return self.scalar_mul(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        self._like(other)
        out = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(key)
                prod = ca * cb
                s = prod if s is None else s + prod
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return LaurentPolynomial(self.rank, self.semifield, out)

    __rmul__ = __mul__

    def scalar_mul(self, c):
        c = _coerce_coeff(self.semifield, c)
        if c.is_zero():
            return LaurentPolynomial.zero(self.rank, self.semifield)
        return LaurentPolynomial(self.rank, self.semifield,
                                 {e: co * c for e, co in self._terms.items()})

    def __pow__(self, n: int):
        n = int(n)
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial Laurent polynomial")
            (exps, c), = self._terms.items()
            if not c.is_monomial():
                raise ValueError("negative power needs an invertible coefficient")
            return LaurentPolynomial(
                self.rank, self.semifield,
                {tuple(e * n for e in exps): c.monomial_part() ** n})
        result = LaurentPolynomial.one(self.rank, self.semifield)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # ---- division ----

    def exact_div(self, den: "LaurentPolynomial") -> "LaurentPolynomial":
        """Exact quotient self/den in the Laurent ring.

        Raises NotLaurentError when the quotient is not a Laurent
        polynomial over ZP (nonzero remainder, a non-dividing leading
        monomial, or a coefficient that fails to divide in ZP).
        """
        self._like(den)
        if den.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        if len(den._terms) == 1:
            (dexp, dc), = den._terms.items()
            out = {}
            for e, c in self._terms.items():
                out[tuple(x - y for x, y in zip(e, dexp))] = c.exact_div(dc)
            return LaurentPolynomial(self.rank, self.semifield, out)

        n = self.rank
        num_min = [min(e[j] for e in self._terms) for j in range(n)]
        den_min = [min(e[j] for e in den._terms) for j in range(n)]
        shift_den = tuple(max(0, -dm) for dm in den_min)
        shift_q = tuple(max(0, dm - nm) for nm, dm in zip(num_min, den_min))
        shift_num = tuple(sq + sd for sq, sd in zip(shift_q, shift_den))

        work = {tuple(x + s for x, s in zip(e, shift_num)): c
                for e, c in self._terms.items()}
        dterms = {tuple(x + s for x, s in zip(e, shift_den)): c
                  for e, c in den._terms.items()}
        dlead = max(dterms, key=_grlex_key)
        dlc = dterms[dlead]

        quot = {}
        while work:
            lead = max(work, key=_grlex_key)
            qexp = tuple(a - b for a, b in zip(lead, dlead))
            if any(e < 0 for e in qexp):
                raise NotLaurentError("leading x-monomial does not divide")
            qc = work[lead].exact_div(dlc)
            prev = quot.get(qexp)
            quot[qexp] = qc if prev is None else prev + qc
            for de, dc in dterms.items():
                key = tuple(a + b for a, b in zip(qexp, de))
                s = work.get(key)
                sub = qc * dc
                s = -sub if s is None else s - sub
                if s.is_zero():
                    work.pop(key, None)
                else:
                    work[key] = s
        return LaurentPolynomial(
            self.rank, self.semifield,
            {tuple(a - s for a, s in zip(e, shift_q)): c for e, c in quot.items()})

    def __truediv__(self, other):
        if isinstance(other, LaurentPolynomial):
            return self.exact_div(other)
        if isinstance(other, SemifieldElement):
            return self.scalar_mul(other.inverse())
        return NotImplemented

    # ---- cluster-specific helpers ----

    def denominator_vector(self):
        """d[j] = -min_j over the exponents of the nonzero terms."""
        if self.is_zero():
            raise ValueError("zero polynomial has no denominator vector")
        return tuple(-min(e[j] for e in self._terms) for j in range(self.rank))

    def partial_derivative(self, i: int) -> "LaurentPolynomial":
        """Formal partial derivative with respect to x_{i} (0-based)."""
        if not 0 <= i < self.rank:
            raise IndexError("variable index out of range")
        out = {}
        for e, c in self._terms.items():
            if e[i] == 0:
                continue
            key = tuple(v - 1 if j == i else v for j, v in enumerate(e))
            out[key] = c * e[i]
        return LaurentPolynomial(self.rank, self.semifield, out)

    def evaluate(self, x_point, semifield_point=()) -> Fraction:
        """Exact evaluation at rational points; x coordinates must be nonzero."""
        xs = [Fraction(v) for v in x_point]
        if len(xs) != self.rank:
            raise DimensionError("x point has wrong length")
        for v in xs:
            if v == 0:
                raise EvaluationError("zero x-coordinate")
        ps = [Fraction(v) for v in semifield_point]
        total = Fraction(0)
        for e, c in self._terms.items():
            term = c.evaluate(ps)
            for v, k in zip(xs, e):
                if k:
                    term *= v ** k
            total += term
        return total

    # ---- ordering, equality, rendering ----

    def sort_key(self):
        return tuple(sorted((e, c.sort_key()) for e, c in self._terms.items()))

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(self.rank, self.semifield, other)
        return (isinstance(other, LaurentPolynomial)
                and self.rank == other.rank
                and self.semifield == other.semifield
                and self._terms == other._terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rank, self.semifield.generators,
                               frozenset((e, c) for e, c in self._terms.items())))
        return self._hash

    def _xpart(self, exps):
        parts = []
        for j, e in enumerate(exps):
            if e == 0:
                continue
            name = "x%d" % (j + 1)
            parts.append(name if e == 1 else "%s^%d" % (name, e))
        return "*".join(parts)

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for exps in sorted(self._terms, key=_grlex_key, reverse=True):
            c = self._terms[exps]
            xs = self._xpart(exps)
            if c.nterms() > 1:
                body = "(%s)" % (str(c),)
                body = body + "*" + xs if xs else body
                pieces.append(("+", body))
                continue
            (ge, gc), = c.terms()
            mono = str(SemifieldElement(self.semifield, ge))
            factors = []
            if abs(gc) != 1 or (mono == "1" and not xs):
                factors.append(str(abs(gc)))
            if mono != "1":
                factors.append(mono)
            if xs:
                factors.append(xs)
            pieces.append(("-" if gc < 0 else "+", "*".join(factors)))
        sign0, body0 = pieces[0]
        out = ("-" + body0) if sign0 == "-" else body0
        for sign, body in pieces[1:]:
            out += " %s %s" % (sign, body)
        return out

    def __repr__(self):
        return "LaurentPolynomial(%s)" % (str(self),)


def exact_div(num: LaurentPolynomial, den: LaurentPolynomial) -> LaurentPolynomial:
    return num.exact_div(den)


def denominator_vector(p: LaurentPolynomial):
    return p.denominator_vector()
