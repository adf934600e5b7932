"""Shared test utilities: random value generators, the independent
power-series oracle for the current components, and numeric cross-checks."""

from __future__ import annotations

from fractions import Fraction

from uqsl2.coeff import RF_ONE, LaurentPoly, PoleError, RatFunc, q_pow, qminus, u_pow
from uqsl2.elements import Element, Monomial, agen, xminus, xplus


def rand_gen(rng, max_idx=3):
    kind = rng.randrange(3)
    if kind == 2:
        return agen(rng.choice([i for i in range(-max_idx, max_idx + 1) if i]))
    idx = rng.randrange(-max_idx, max_idx + 1)
    return xplus(idx) if kind == 0 else xminus(idx)


def rand_word(rng, max_len=6, max_idx=3):
    return tuple(rand_gen(rng, max_idx) for _ in range(rng.randrange(0, max_len + 1)))


def rand_coeff(rng):
    c = q_pow(rng.randrange(-2, 3)) * u_pow(rng.randrange(-2, 3)) * rng.randrange(1, 5)
    if rng.random() < 0.3:
        c = c / qminus()
    if rng.random() < 0.5:
        c = -c
    return c


def rand_element(rng, nterms=3, max_len=4, max_idx=3, max_kexp=2):
    terms = {}
    for _ in range(rng.randrange(1, nterms + 1)):
        mono = Monomial(rand_word(rng, max_len, max_idx), rng.randrange(-max_kexp, max_kexp + 1))
        terms[mono] = rand_coeff(rng)
    return Element(terms)


def rand_poly(rng, nterms=3, max_exp=3):
    terms = {}
    for _ in range(rng.randrange(0, nterms + 1)):
        e = (rng.randrange(-max_exp, max_exp + 1), rng.randrange(-max_exp, max_exp + 1))
        terms[e] = rng.randrange(-5, 6)
    return LaurentPoly(terms)


def rand_ratfunc(rng):
    num = rand_poly(rng)
    den = rand_poly(rng)
    while den.is_zero():
        den = rand_poly(rng)
    return RatFunc.make(num, den)


def rand_point(rng):
    q0 = Fraction(rng.randrange(2, 9), rng.randrange(1, 5))
    u0 = Fraction(rng.randrange(2, 9), rng.randrange(1, 5))
    return q0, u0


def assert_coeffs_match_numerically(a: Element, b: Element, rng, points=3):
    """Independent oracle on coefficient canonicalization: matched monomials
    of two equal elements must evaluate identically at random rational
    points."""
    assert set(a.terms) == set(b.terms)
    for mono in a.terms:
        done = 0
        while done < points:
            q0, u0 = rand_point(rng)
            try:
                va = a.terms[mono].evaluate(q0, u0)
                vb = b.terms[mono].evaluate(q0, u0)
            except PoleError:
                continue
            assert va == vb, (mono, q0, u0)
            done += 1


# --- independent series oracle for the current components ---------------


def _series_mul(a, b, m_max):
    out = [dict() for _ in range(m_max + 1)]
    for i, da in enumerate(a):
        if not da:
            continue
        for j, db in enumerate(b):
            if i + j > m_max or not db:
                continue
            tgt = out[i + j]
            for ka, ca in da.items():
                for kb, cb in db.items():
                    key = tuple(sorted(ka + kb))
                    c = ca * cb
                    acc = tgt.get(key)
                    tgt[key] = c if acc is None else acc + c
    return out


def series_exponential(m_max: int, coeff: RatFunc, index_sign: int):
    """Coefficients of exp(coeff * sum_{k>=1} a_(index_sign*k) z^k) through
    z^m_max, in commuting a variables: a list of {sorted index tuple:
    RatFunc} by z power.  Brute force, independent of the partition code."""
    x = [dict() for _ in range(m_max + 1)]
    for k in range(1, m_max + 1):
        x[k][(index_sign * k,)] = coeff
    result = [dict() for _ in range(m_max + 1)]
    result[0][()] = RF_ONE
    term = [dict() for _ in range(m_max + 1)]
    term[0][()] = RF_ONE
    for j in range(1, m_max + 1):
        term = _series_mul(term, x, m_max)
        inv_j = RatFunc.from_fraction(Fraction(1, j))
        term = [{k: c * inv_j for k, c in d.items()} for d in term]
        for i, d in enumerate(term):
            tgt = result[i]
            for k, c in d.items():
                acc = tgt.get(k)
                tgt[k] = c if acc is None else acc + c
    return result


def oracle_current(m: int, upper: bool) -> Element:
    """psi_m (upper) or phi_m (not upper) via the series oracle."""
    if upper:
        if m < 0:
            return Element.zero()
        coeffs = series_exponential(m, qminus(), +1)[m]
        kexp = 1
    else:
        if m > 0:
            return Element.zero()
        coeffs = series_exponential(-m, -qminus(), -1)[-m]
        kexp = -1
    terms = {}
    for key, c in coeffs.items():
        word = tuple(agen(i) for i in key)
        terms[Monomial(word, kexp)] = c
    return Element(terms)
