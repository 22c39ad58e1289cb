r"""Tropical semifields and their integer group rings.

A tropical semifield ``Trop(u_1, ..., u_m)`` is the free multiplicative
abelian group on the generators ``u_j`` together with the auxiliary
addition

    u^a (+) u^b = u^{min(a, b)}   (componentwise minimum of exponents).

Coefficients of cluster variables live in the group ring ZP of that
group: finite integer combinations of monomials ``u^a`` with ``a`` an
integer vector.  ZP is an integral domain, and every element of P is an
invertible monomial of ZP, which is what keeps exchange-relation
denominators harmless.

Everything here is exact: exponents and coefficients are Python ints,
numeric evaluation returns ``fractions.Fraction``.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionError, EvaluationError, NotLaurentError


class TropicalSemifield:
    """The tropical semifield on an ordered tuple of named generators.

    The generator order is part of the identity of the semifield: two
    semifields compare equal iff their generator name tuples are equal.
    An empty generator tuple gives the trivial semifield {1}, whose
    group ring is plain Z.
    """

    __slots__ = ("generators", "_index")

    def __init__(self, generators=()):
        gens = tuple(generators)
        for g in gens:
            if not isinstance(g, str) or not g:
                raise ValueError("generator names must be nonempty strings")
        if len(set(gens)) != len(gens):
            raise ValueError("duplicate generator name")
        self.generators = gens
        self._index = {g: i for i, g in enumerate(gens)}

    @property
    def ngens(self):
        return len(self.generators)

    def one(self) -> "SemifieldElement":
        return SemifieldElement(self, (0,) * self.ngens)

    def monomial(self, exponents) -> "SemifieldElement":
        exps = tuple(int(e) for e in exponents)
        if len(exps) != self.ngens:
            raise DimensionError(
                "expected %d exponents, got %d" % (self.ngens, len(exps)))
        return SemifieldElement(self, exps)

    def generator(self, which) -> "SemifieldElement":
        if isinstance(which, str):
            if which not in self._index:
                raise KeyError("no generator named %r" % (which,))
            i = self._index[which]
        else:
            i = range(self.ngens)[which]
        exps = [0] * self.ngens
        exps[i] = 1
        return SemifieldElement(self, tuple(exps))

    def parse(self, text: str) -> "SemifieldElement":
        """Parse a monomial string like ``y1^2*z1^-1`` or ``1``."""
        s = text.strip()
        if s == "1":
            return self.one()
        exps = [0] * self.ngens
        for factor in s.split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError("empty factor in %r" % (text,))
            if "^" in factor:
                name, _, power = factor.partition("^")
                try:
                    e = int(power)
                except ValueError:
                    raise ValueError("bad exponent %r in %r" % (power, text)) from None
            else:
                name, e = factor, 1
            name = name.strip()
            if name not in self._index:
                raise KeyError("no generator named %r in %r" % (name, text))
            exps[self._index[name]] += e
        return SemifieldElement(self, tuple(exps))

    def group_ring_zero(self) -> "GroupRingElement":
        return GroupRingElement(self, {})

    def group_ring_one(self) -> "GroupRingElement":
        return GroupRingElement(self, {(0,) * self.ngens: 1})

    def __eq__(self, other):
        return isinstance(other, TropicalSemifield) and self.generators == other.generators

    def __hash__(self):
        return hash(("TropicalSemifield", self.generators))

    def __repr__(self):
        return "TropicalSemifield(%r)" % (list(self.generators),)


def _check_same_semifield(a, b):
    if a.semifield != b.semifield:
        raise DimensionError("operands live over different semifields: %r vs %r"
                             % (a.semifield, b.semifield))


class SemifieldElement:
    """A monomial ``u^a`` in a tropical semifield, stored by exponent vector."""

    __slots__ = ("semifield", "exponents")

    def __init__(self, semifield: TropicalSemifield, exponents):
        self.semifield = semifield
        self.exponents = tuple(int(e) for e in exponents)
        if len(self.exponents) != semifield.ngens:
            raise DimensionError("exponent vector has wrong length")

    def is_one(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def __mul__(self, other):
        if not isinstance(other, SemifieldElement):
            return NotImplemented
        _check_same_semifield(self, other)
        return SemifieldElement(
            self.semifield,
            tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def inverse(self) -> "SemifieldElement":
        return SemifieldElement(self.semifield, tuple(-e for e in self.exponents))

    def __pow__(self, n: int):
        n = int(n)
        return SemifieldElement(self.semifield, tuple(e * n for e in self.exponents))

    def tropical_add(self, other: "SemifieldElement") -> "SemifieldElement":
        if not isinstance(other, SemifieldElement):
            raise TypeError("tropical_add expects a SemifieldElement")
        _check_same_semifield(self, other)
        return SemifieldElement(
            self.semifield,
            tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def as_group_ring(self, coeff: int = 1) -> "GroupRingElement":
        if coeff == 0:
            return GroupRingElement(self.semifield, {})
        return GroupRingElement(self.semifield, {self.exponents: int(coeff)})

    def evaluate(self, point) -> Fraction:
        """Evaluate at positive/nonzero rational generator values."""
        vals = [Fraction(v) for v in point]
        if len(vals) != self.semifield.ngens:
            raise DimensionError("point has wrong length")
        out = Fraction(1)
        for v, e in zip(vals, self.exponents):
            if e and v == 0:
                raise EvaluationError("zero value for a generator with nonzero exponent")
            out *= v ** e
        return out

    def sort_key(self):
        return self.exponents

    def __eq__(self, other):
        return (isinstance(other, SemifieldElement)
                and self.semifield == other.semifield
                and self.exponents == other.exponents)

    def __hash__(self):
        return hash((self.semifield.generators, self.exponents))

    def __str__(self):
        parts = []
        for name, e in zip(self.semifield.generators, self.exponents):
            if e == 0:
                continue
            parts.append(name if e == 1 else "%s^%d" % (name, e))
        return "*".join(parts) if parts else "1"

    def __repr__(self):
        return "SemifieldElement(%s)" % (str(self),)


def trop_mul(a: SemifieldElement, b: SemifieldElement) -> SemifieldElement:
    return a * b


def trop_add(a: SemifieldElement, b: SemifieldElement) -> SemifieldElement:
    return a.tropical_add(b)


def eval_poly_tropical(coeffs, arg: SemifieldElement) -> SemifieldElement:
    """Tropically evaluate ``sum_s coeffs[s] * arg^s``.

    ``coeffs`` is the coefficient list (c_0, ..., c_r) of an exchange
    polynomial; c_0 = c_r = 1 is required there, and this routine checks
    nothing beyond nonemptiness so it can also fold arbitrary monomial
    lists.
    """
    coeffs = list(coeffs)
    if not coeffs:
        raise ValueError("empty coefficient list")
    acc = coeffs[0]
    power = None
    for c in coeffs[1:]:
        power = arg if power is None else power * arg
        acc = acc.tropical_add(c * power)
    return acc


def _grlex_key(exps):
    # graded lexicographic: total degree first, ties broken lexicographically
    return (sum(exps), exps)


class GroupRingElement:
    """An element of ZP: a finite sum ``sum_a c_a * u^a`` with integer c_a.

    Internally a dict mapping exponent tuples to nonzero ints.  Treated
    as immutable; all arithmetic returns fresh objects.

    Example::

        P = TropicalSemifield(["y1", "y2"])
        one = P.group_ring_one()
        y1 = P.generator("y1").as_group_ring()
        print(one + y1)        # 1 + y1
    """

    __slots__ = ("semifield", "_terms", "_hash")

    def __init__(self, semifield: TropicalSemifield, terms: dict):
        self.semifield = semifield
        clean = {}
        m = semifield.ngens
        for exps, c in terms.items():
            c = int(c)
            if c == 0:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != m:
                raise DimensionError("exponent tuple of wrong length")
            clean[exps] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def from_int(cls, semifield: TropicalSemifield, n: int) -> "GroupRingElement":
        if n == 0:
            return cls(semifield, {})
        return cls(semifield, {(0,) * semifield.ngens: int(n)})

    def terms(self):
        """Iterate (exponent tuple, integer coefficient) pairs."""
        return self._terms.items()

    def nterms(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(0,) * self.semifield.ngens: 1}

    def is_monomial(self) -> bool:
        """True when a single term with coefficient +1 (a unit coming from P)."""
        return len(self._terms) == 1 and next(iter(self._terms.values())) == 1

    def monomial_part(self) -> SemifieldElement:
        if len(self._terms) != 1:
            raise ValueError("not a single-term element")
        (exps,) = self._terms.keys()
        return SemifieldElement(self.semifield, exps)

    def __add__(self, other):
        if isinstance(other, int):
            other = GroupRingElement.from_int(self.semifield, other)
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        _check_same_semifield(self, other)
        out = dict(self._terms)
        for exps, c in other._terms.items():
            s = out.get(exps, 0) + c
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return GroupRingElement(self.semifield, out)

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement(self.semifield,
                                {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = GroupRingElement.from_int(self.semifield, other)
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return GroupRingElement(self.semifield, {})
            return GroupRingElement(self.semifield,
                                    {e: c * other for e, c in self._terms.items()})
        if isinstance(other, SemifieldElement):
            return self.mul_monomial(other)
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        _check_same_semifield(self, other)
        out = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(key, 0) + ca * cb
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return GroupRingElement(self.semifield, out)

    __rmul__ = __mul__

    def mul_monomial(self, mono: SemifieldElement) -> "GroupRingElement":
        """Multiply by a unit u^a of P: shift every exponent vector by a."""
        _check_same_semifield(self, mono)
        a = mono.exponents
        return GroupRingElement(
            self.semifield,
            {tuple(x + y for x, y in zip(e, a)): c for e, c in self._terms.items()})

    def __pow__(self, n: int):
        n = int(n)
        if n < 0:
            if self.is_monomial():
                return self.monomial_part().__pow__(n).as_group_ring()
            raise ValueError("negative power of a non-unit group ring element")
        result = GroupRingElement.from_int(self.semifield, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def exact_div(self, den: "GroupRingElement") -> "GroupRingElement":
        """Exact division in ZP; raises NotLaurentError on any remainder.

        ZP is graded by the (Laurent) monomials, so when the quotient
        exists the graded-lex leading terms must divide at every step.
        """
        if isinstance(den, SemifieldElement):
            return self.mul_monomial(den.inverse())
        _check_same_semifield(self, den)
        if den.is_zero():
            raise ZeroDivisionError("division by zero in the group ring")
        if self.is_zero():
            return self
        if len(den._terms) == 1:
            (dexp, dc), = den._terms.items()
            out = {}
            for e, c in self._terms.items():
                q, r = divmod(c, dc)
                if r:
                    raise NotLaurentError(
                        "coefficient %d not divisible by %d" % (c, dc))
                out[tuple(x - y for x, y in zip(e, dexp))] = q
            return GroupRingElement(self.semifield, out)

        m = self.semifield.ngens
        num_min = [min(e[j] for e in self._terms) for j in range(m)]
        den_min = [min(e[j] for e in den._terms) for j in range(m)]
        shift_den = tuple(max(0, -dm) for dm in den_min)
        # shift the quotient into the polynomial cone as well
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
                raise NotLaurentError("leading monomial does not divide")
            qc, r = divmod(work[lead], dlc)
            if r:
                raise NotLaurentError("leading coefficient does not divide")
            quot[qexp] = quot.get(qexp, 0) + qc
            for de, dc in dterms.items():
                key = tuple(a + b for a, b in zip(qexp, de))
                s = work.get(key, 0) - qc * dc
                if s:
                    work[key] = s
                else:
                    work.pop(key, None)
        return GroupRingElement(
            self.semifield,
            {tuple(a - s for a, s in zip(e, shift_q)): c for e, c in quot.items()})

    def min_exponent(self, j: int) -> int:
        if not self._terms:
            raise ValueError("zero element has no exponents")
        return min(e[j] for e in self._terms)

    def evaluate(self, point) -> Fraction:
        vals = [Fraction(v) for v in point]
        if len(vals) != self.semifield.ngens:
            raise DimensionError("point has wrong length")
        total = Fraction(0)
        for exps, c in self._terms.items():
            term = Fraction(c)
            for v, e in zip(vals, exps):
                if e and v == 0:
                    raise EvaluationError("zero value for a generator with nonzero exponent")
                term *= v ** e
            total += term
        return total

    def sort_key(self):
        return tuple(sorted(self._terms.items()))

    def __eq__(self, other):
        if isinstance(other, int):
            other = GroupRingElement.from_int(self.semifield, other)
        return (isinstance(other, GroupRingElement)
                and self.semifield == other.semifield
                and self._terms == other._terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.semifield.generators,
                               frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        if not self._terms:
            return "0"
        names = self.semifield.generators
        pieces = []
        for exps in sorted(self._terms):
            c = self._terms[exps]
            mono = []
            for name, e in zip(names, exps):
                if e == 0:
                    continue
                mono.append(name if e == 1 else "%s^%d" % (name, e))
            mono_s = "*".join(mono)
            if not mono_s:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono_s
            else:
                body = "%d*%s" % (abs(c), mono_s)
            pieces.append(("-" if c < 0 else "+", body))
        sign0, body0 = pieces[0]
        out = ("-" + body0) if sign0 == "-" else body0
        for sign, body in pieces[1:]:
            out += " %s %s" % (sign, body)
        return out

    def __repr__(self):
        return "GroupRingElement(%s)" % (str(self),)
