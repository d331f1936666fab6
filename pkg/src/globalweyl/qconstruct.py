"""
The elements q_i(phi, chi) and q(phi_1, ..., phi_n) of U(sl_n (x) A).

Recursion (multiset keys are basis indices of A):

    q_i(0, 0)     = 1
    q_i(0, chi)   = -1/|chi| * sum_{0 != psi <= chi} M(psi) (h_i (x) pi(psi)) q_i(0, chi - psi)
    q_i(phi, chi) = -1/|phi| * sum_{psi <= chi} sum_{d in supp phi}
                        M(psi) (x_{-i} (x) d pi(psi)) q_i(phi - chi_d, chi - psi)

In the last clause psi runs over every submultiset of chi, including 0 and
chi itself, and d runs over the support of phi (not weighted by phi(d)).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .algebra import AlgebraSpec, alg_mul, pi
from .envelope import UElement, act, gen, u_mul, u_sum
from .multiset import EMPTY, Multiset, characteristic, multinomial, submultisets
from .sln import H, x_neg
from .symtensor import Tensor


def _check(i: int, phi: Multiset, chi: Multiset, spec: AlgebraSpec, n: int | None):
    if i < 1 or (n is not None and i > n - 1):
        raise ValueError(f"invalid root index i={i}" + (f" for n={n}" if n else ""))
    for key in tuple(phi.support()) + tuple(chi.support()):
        if not (isinstance(key, int) and 0 <= key < spec.dim):
            raise ValueError(f"multiset key {key!r} is not a basis index")


def _terms(i: int, phi: Multiset, chi: Multiset, spec: AlgebraSpec):
    """(coeff, letter element, (phi', chi')) for one unfolding of the recursion."""
    if not phi and not chi:
        return []
    out = []
    if not phi:
        scale = Fraction(-1, chi.size)
        for psi in submultisets(chi):
            if not psi:
                continue
            letter = gen(H(i), pi(psi, spec))
            if letter:
                out.append((scale * multinomial(psi), letter, (EMPTY, chi - psi)))
        return out
    scale = Fraction(-1, phi.size)
    for psi in submultisets(chi):
        p = pi(psi, spec)
        if not p:
            continue
        for d in phi.support():
            letter = gen(x_neg(i), alg_mul(spec.basis(d), p))
            if letter:
                out.append((scale * multinomial(psi), letter, (phi - characteristic(d), chi - psi)))
    return out


@lru_cache(maxsize=None)
def _q_cached(i: int, phi: Multiset, chi: Multiset, spec: AlgebraSpec) -> UElement:
    if not phi and not chi:
        return UElement.one()
    return u_sum(u_mul(letter, _q_cached(i, phi2, chi2, spec)) * c
                 for c, letter, (phi2, chi2) in _terms(i, phi, chi, spec))


def _q_plain(i: int, phi: Multiset, chi: Multiset, spec: AlgebraSpec) -> UElement:
    if not phi and not chi:
        return UElement.one()
    return u_sum(u_mul(letter, _q_plain(i, phi2, chi2, spec)) * c
                 for c, letter, (phi2, chi2) in _terms(i, phi, chi, spec))


def q_single(i: int, phi: Multiset, chi: Multiset, spec: AlgebraSpec,
             n: int | None = None, memo: bool = True) -> UElement:
    """q_i(phi, chi) as a UElement."""
    _check(i, phi, chi, spec, n)
    return (_q_cached if memo else _q_plain)(i, phi, chi, spec)


def q_factors(parts: Sequence[Multiset], spec: AlgebraSpec) -> list[tuple]:
    """Factors of q(phi_1..phi_n) left to right, as (i, phi, chi) triples.

    The leftmost is q_{n-1}(phi_n, phi_{n-1}); then for i = n-2 .. 1 the
    factor q_i((|phi_{i+1}| + ... + |phi_n|) chi_1, phi_i).
    """
    n = len(parts)
    if n < 2:
        raise ValueError("need n >= 2")
    unit = spec.unit_index
    out = [(n - 1, parts[n - 1], parts[n - 2])]
    for i in range(n - 2, 0, -1):
        tail = sum(p.size for p in parts[i:])
        out.append((i, characteristic(unit) * tail, parts[i - 1]))
    return out


def q_tuple(parts: Sequence[Multiset], spec: AlgebraSpec) -> UElement:
    out = UElement.one()
    for i, phi, chi in q_factors(parts, spec):
        out = u_mul(out, q_single(i, phi, chi, spec, n=len(parts)))
    return out


def act_q_tuple(parts: Sequence[Multiset], t: Tensor, spec: AlgebraSpec) -> Tensor:
    """q(phi_1..phi_n) . t, applying the factors right to left.

    Equal to ``act(q_tuple(parts, spec), t, spec)`` since the action is a
    homomorphism, without forming the full product of words.
    """
    for i, phi, chi in reversed(q_factors(parts, spec)):
        t = act(q_single(i, phi, chi, spec, n=len(parts)), t, spec)
        if not t:
            break
    return t


def clear_cache():
    _q_cached.cache_clear()
