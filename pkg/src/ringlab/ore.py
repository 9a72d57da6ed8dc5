"""Skew polynomials over a finite base ring: x·b = sigma(b)·x + delta(b).

The polynomial ring itself is infinite, so every global claim here is
degree-truncated and says so; the base ring B, its endomorphism sigma and
the twisted derivation delta (delta(bc) = sigma(b)delta(c) + delta(b)c) are
validated exactly.  Polynomials are coefficient sequences over B with no
trailing zeros; the degree-plus-one map sends 0 to 0.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .constructions.crossed import RingMap
from .errors import PreconditionUnmet, ShapeMismatch
from .ideals import (DEFAULT_ELEMENT_CAP, DEFAULT_SEED, IdealBasis,
                     center, enumerate_ideals)
from .rings import Element, Ring


@dataclass
class SigmaDerivationData:
    base: Ring
    sigma: RingMap
    delta: RingMap          # additive map; multiplicativity is not required

    def __post_init__(self):
        props = self.base.probe_properties()
        if not (props.associative and props.unital):
            raise ShapeMismatch("the base ring must be associative and unital")

    @property
    def unit(self):
        return self.base.probe_properties().unit

    def x(self):
        return SkewPolynomial(self, (self.base.zero(), self.unit))

    def constant(self, b: Element):
        return SkewPolynomial(self, (b,))

    def polynomial(self, coeffs):
        return SkewPolynomial(self, tuple(coeffs))


def validate_sigma_derivation(data: SigmaDerivationData):
    """Itemized endomorphism/additivity/Leibniz/delta(1)=0 checks with
    witnesses."""
    B = data.base
    report = []
    props = B.probe_properties()
    report.append(("base associative", props.associative, props.associative_witness))
    report.append(("base unital", props.unital, None))
    span = B.spanning_elements()
    pairs = [(a, b) for a in span for b in span]
    if B.is_table:
        add_ok = all(data.sigma.apply(a + b) == data.sigma.apply(a) + data.sigma.apply(b)
                     for a, b in pairs)
        report.append(("sigma additive", add_ok, None))
        dadd_ok = all(data.delta.apply(a + b) == data.delta.apply(a) + data.delta.apply(b)
                      for a, b in pairs)
        report.append(("delta additive", dadd_ok, None))
    mult_ok, wit = True, None
    for a, b in pairs:
        if data.sigma.apply(a * b) != data.sigma.apply(a) * data.sigma.apply(b):
            mult_ok, wit = False, (a, b)
            break
    report.append(("sigma multiplicative", mult_ok, wit))
    if props.unital:
        report.append(("sigma unital", data.sigma.apply(props.unit) == props.unit, None))
        report.append(("delta kills the unit", data.delta.apply(props.unit).is_zero(), None))
    leib_ok, wit = True, None
    for a, b in pairs:
        lhs = data.delta.apply(a * b)
        rhs = data.sigma.apply(a) * data.delta.apply(b) + data.delta.apply(a) * b
        if lhs != rhs:
            leib_ok, wit = False, (a, b)
            break
    report.append(("twisted Leibniz rule", leib_ok, wit))
    return report


class SkewPolynomial:
    """Coefficients b_0..b_n over the base, b_n nonzero unless zero."""

    __slots__ = ("data", "coeffs")

    def __init__(self, data: SigmaDerivationData, coeffs):
        self.data = data
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        if self.is_zero():
            raise ValueError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    def leading(self):
        return self.coeffs[-1]

    def coeff(self, i):
        return self.coeffs[i] if i < len(self.coeffs) else self.data.base.zero()

    def is_monic(self):
        return not self.is_zero() and self.leading() == self.data.unit

    def __add__(self, other):
        self._chk(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPolynomial(self.data,
                              [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __neg__(self):
        return SkewPolynomial(self.data, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._chk(other)
        return ore_mul(self, other)

    def __eq__(self, other):
        return (isinstance(other, SkewPolynomial) and other.data is self.data
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((id(self.data), self.coeffs))

    def _chk(self, other):
        if not isinstance(other, SkewPolynomial) or other.data is not self.data:
            raise ShapeMismatch("polynomials over different data")

    def __repr__(self):
        if self.is_zero():
            return "SkewPolynomial(0)"
        return "SkewPolynomial(deg=%d)" % self.degree()


def x_power_times(data: SigmaDerivationData, i: int, b: Element):
    """Coefficients (by ascending degree) of x^i · b."""
    cur = [b]
    for _ in range(i):
        nxt = [data.base.zero()] * (len(cur) + 1)
        for j, c in enumerate(cur):
            nxt[j + 1] = nxt[j + 1] + data.sigma.apply(c)
            nxt[j] = nxt[j] + data.delta.apply(c)
        cur = nxt
    return cur


def s_coefficients(i: int, b: Element, data: SigmaDerivationData):
    """The unique s_i,0(b)..s_i,i(b) with x^i b = sum_j s_i,i-j(b) x^j.

    Returned leading-first: s_i,0(b) multiplies x^i (and equals b when
    sigma is the identity).
    """
    return list(reversed(x_power_times(data, i, b)))


def ore_mul(p: SkewPolynomial, q: SkewPolynomial) -> SkewPolynomial:
    """The bilinear product induced by x·b = sigma(b)x + delta(b)."""
    data = p.data
    if p.is_zero() or q.is_zero():
        return SkewPolynomial(data, ())
    out = [data.base.zero()] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a.is_zero():
            continue
        for j, b in enumerate(q.coeffs):
            if b.is_zero():
                continue
            for k, t in enumerate(x_power_times(data, i, b)):
                if not t.is_zero():
                    out[k + j] = out[k + j] + a * t
    return SkewPolynomial(data, out)


def ore_degree_map(p: SkewPolynomial) -> int:
    """deg(p) + 1 for nonzero p, 0 for the zero polynomial."""
    return 0 if p.is_zero() else p.degree() + 1


def random_polynomial(data, rng, max_deg, monic=False):
    B = data.base
    deg = rng.randrange(max_deg + 1)
    coeffs = []
    for i in range(deg + 1):
        if B.is_table:
            coeffs.append(B.element(rng.randrange(B.n)))
        else:
            coeffs.append(B.element(tuple(rng.randrange(B.modulus)
                                          for _ in range(B.dim))))
    if monic:
        coeffs[-1] = data.unit
    elif coeffs[-1].is_zero():
        coeffs[-1] = data.unit
    return SkewPolynomial(data, coeffs)


def assert_associativity_sample(data, samples=1000, seed=DEFAULT_SEED, max_deg=3):
    """ore_mul is associative on random triples whenever B is associative."""
    rng = random.Random(seed)
    for _ in range(samples):
        p = random_polynomial(data, rng, max_deg)
        q = random_polynomial(data, rng, max_deg)
        r = random_polynomial(data, rng, max_deg)
        if (p * q) * r != p * (q * r):
            return False, (p, q, r)
    return True, None


# ---------------------------------------------------------------------------
# invariance and simplicity of the base
# ---------------------------------------------------------------------------

def is_sigma_delta_invariant(I: IdealBasis, data: SigmaDerivationData) -> bool:
    """sigma(I) ⊆ I and delta(I) ⊆ I, on spanning sets."""
    for v in I.spanning():
        if not I.contains(data.sigma.apply(v)):
            return False
        if not I.contains(data.delta.apply(v)):
            return False
    return True


@dataclass
class SigmaDeltaVerdict:
    simple: bool
    witness: IdealBasis | None = None

    def __repr__(self):
        return "SigmaDeltaSimple" if self.simple else f"NotSigmaDeltaSimple({self.witness!r})"


def is_sigma_delta_simple(data: SigmaDerivationData,
                          cap=DEFAULT_ELEMENT_CAP) -> SigmaDeltaVerdict:
    for I in enumerate_ideals(data.base, cap=cap):
        if I.is_zero() or I.span.is_full():
            continue
        if is_sigma_delta_invariant(I, data):
            return SigmaDeltaVerdict(False, I)
    return SigmaDeltaVerdict(True)


# ---------------------------------------------------------------------------
# commutator calculations
# ---------------------------------------------------------------------------

def commutator_degree_drop(a: SkewPolynomial, b, data: SigmaDerivationData):
    """The commutator of a with a central base element or with x, plus
    whether its degree-plus-one value drops below that of ``a``.

    Only for differential data (sigma = id).  For b = "x" the input must be
    monic and the commutator is checked against -sum delta(b_i) x^i; for
    central b the top coefficient is checked to cancel.
    """
    if not data.sigma.is_identity():
        raise PreconditionUnmet("commutator calculus here requires sigma = id")
    if a.is_zero():
        raise PreconditionUnmet("a must be nonzero")
    n = a.degree()
    if isinstance(b, str) and b == "x":
        if not a.is_monic():
            raise PreconditionUnmet("the x-commutator form needs a monic polynomial")
        x = data.x()
        comm = a * x - x * a
        expected = SkewPolynomial(
            data, [-data.delta.apply(a.coeff(i)) for i in range(n)])
        if comm != expected:
            raise AssertionError("x-commutator does not match the closed form")
    else:
        zb = center(data.base)
        if not zb.contains(b):
            raise PreconditionUnmet("b must be central in the base ring")
        pb = data.constant(b)
        comm = a * pb - pb * a
        expected_coeffs = [data.base.zero()] * (n + 1)
        for i in range(n + 1):
            bi = a.coeff(i)
            s = s_coefficients(i, b, data)     # s[0] multiplies x^i
            for j in range(i + 1):
                expected_coeffs[j] = expected_coeffs[j] + bi * s[i - j]
            expected_coeffs[i] = expected_coeffs[i] - b * bi
        if comm != SkewPolynomial(data, expected_coeffs):
            raise AssertionError("commutator does not match the expansion")
        if not comm.is_zero() and comm.degree() >= n:
            top = a.leading() * s_coefficients(n, b, data)[0] - b * a.leading()
            if top.is_zero():
                raise AssertionError("top coefficient cancels but degree did not drop")
    drop = ore_degree_map(comm) < ore_degree_map(a)
    return drop, comm


def check_A_invariance_truncated(I: IdealBasis, data: SigmaDerivationData,
                                 n_max: int = 4) -> bool:
    """B·x^n·I ⊆ I·A for n ≤ n_max, decided degreewise.

    The polynomial ring is a free left B-module on the powers of x and
    I·B = I for unital B, so membership in I·A means every coefficient lies
    in I; it suffices that the expansion coefficients of x^n·i stay in I.
    """
    for v in I.spanning():
        for n in range(n_max + 1):
            for t in x_power_times(data, n, v):
                if not I.contains(t):
                    return False
    return True


def degree_one_escape_witness(I: IdealBasis, data: SigmaDerivationData):
    """For a non-sigma-delta-invariant ideal, the degree-1 product x·b that
    leaves I·A (its coefficients sigma(b), delta(b) do not all stay in I)."""
    for v in I.spanning():
        sb, db = data.sigma.apply(v), data.delta.apply(v)
        if not I.contains(sb) or not I.contains(db):
            return v, SkewPolynomial(data, (db, sb))
    return None


# ---------------------------------------------------------------------------
# sampled degree-map evidence for the polynomial ring itself
# ---------------------------------------------------------------------------

@dataclass
class CommutatorSampleReport:
    samples: int
    seed: int
    max_degree: int
    top_coefficient_failures: int
    drop_failures: int
    x_form_failures: int

    @property
    def clean(self):
        return (self.top_coefficient_failures == 0 and self.drop_failures == 0
                and self.x_form_failures == 0)


def degree_map_commutator_samples(data: SigmaDerivationData, samples=1000,
                                  seed=DEFAULT_SEED, max_deg=4) -> CommutatorSampleReport:
    """Sampled evidence for the degree-drop condition on random monic
    polynomials: central commutators lose their top coefficient and the
    x-commutator matches its closed form.  Evidence only, never a proof."""
    if not data.sigma.is_identity():
        raise PreconditionUnmet("sampling requires sigma = id")
    rng = random.Random(seed)
    zb = center(data.base).spanning()
    top_fail = drop_fail = x_fail = 0
    for _ in range(samples):
        a = random_polynomial(data, rng, max_deg, monic=True)
        da = ore_degree_map(a)
        for b in zb:
            try:
                drop, comm = commutator_degree_drop(a, b, data)
            except AssertionError:
                top_fail += 1
                continue
            if not comm.is_zero() and comm.degree() >= a.degree():
                top_fail += 1
            if not drop:
                drop_fail += 1
        try:
            drop, comm = commutator_degree_drop(a, "x", data)
        except AssertionError:
            x_fail += 1
            continue
        if not drop:
            drop_fail += 1
    return CommutatorSampleReport(samples, seed, max_deg, top_fail, drop_fail, x_fail)
