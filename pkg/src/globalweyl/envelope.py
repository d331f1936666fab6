"""
U(sl_n (x) A) as formal linear combinations of words in current generators.

A letter is ``(gen, b)`` meaning gen (x) b_b for a basis index b.  A word is
a tuple of letters; the empty word is 1.  No PBW normal form is attempted:
identities that hold only modulo the relations of U are checked through
the module action, where they are literally true.

When a word acts, its rightmost letter acts first.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Sequence

from .algebra import AlgebraElement, AlgebraSpec, alg_mul, format_rational, parse_rational
from .sln import Gen, act_natural, bracket
from .symtensor import Tensor


def _collect(pairs: Iterable) -> dict:
    acc: dict = {}
    for k, c in pairs:
        acc[k] = acc.get(k, 0) + c
    return {k: c for k, c in acc.items() if c}


class UElement:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, Fraction] | None = None):
        self.terms = {tuple(w): Fraction(c) for w, c in (terms or {}).items() if c}

    @classmethod
    def _raw(cls, terms: dict) -> "UElement":
        u = cls.__new__(cls)
        u.terms = terms
        return u

    @classmethod
    def one(cls) -> "UElement":
        return cls._raw({(): Fraction(1)})

    @classmethod
    def zero(cls) -> "UElement":
        return cls._raw({})

    @classmethod
    def word(cls, letters: Sequence[tuple], coeff=1) -> "UElement":
        return cls({tuple(letters): coeff})

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, UElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "UElement") -> "UElement":
        return UElement._raw(_collect(list(self.terms.items()) + list(other.terms.items())))

    def __neg__(self):
        return UElement._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, UElement):
            return u_mul(self, other)
        c = Fraction(other)
        if not c:
            return UElement.zero()
        return UElement._raw({w: c * v for w, v in self.terms.items()})

    def __rmul__(self, c):
        return self * c

    def sorted_terms(self) -> list:
        return sorted(self.terms.items())

    def letters(self) -> set:
        return {letter for w in self.terms for letter in w}

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            body = "".join(f"({g!r}.b{b})" for g, b in w) or "1"
            parts.append(f"{c}*{body}")
        return " + ".join(parts)


def gen(z: Gen, a: AlgebraElement) -> UElement:
    """z (x) a, expanded over the basis of A."""
    return UElement._raw({((z, b),): c for b, c in sorted(a.coords.items()) if c})


def u_mul(u: UElement, v: UElement) -> UElement:
    return UElement._raw(_collect(
        (w1 + w2, c1 * c2) for w1, c1 in u.terms.items() for w2, c2 in v.terms.items()))


def u_sum(elems: Iterable[UElement]) -> UElement:
    return UElement._raw(_collect(kv for u in elems for kv in u.terms.items()))


def current_bracket(z: Gen, a: AlgebraElement, w: Gen, b: AlgebraElement) -> UElement:
    """[z (x) a, w (x) b] = [z, w] (x) ab as a combination of single letters."""
    ab = alg_mul(a, b)
    return u_sum(gen(g, ab) * c for g, c in bracket(z, w).items())


def commutator(u: UElement, v: UElement) -> UElement:
    return u * v - v * u


# -- tensor powers of U

class TensorUElement:
    """Element of U^{(x) k}: map from k-tuples of words to Fractions."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: Mapping[tuple, Fraction] | None = None):
        self.arity = arity
        clean = {}
        for key, c in (terms or {}).items():
            if len(key) != arity:
                raise ValueError(f"component tuple of length {len(key)}, expected {arity}")
            if c:
                clean[tuple(key)] = Fraction(c)
        self.terms = clean

    def __eq__(self, other):
        if not isinstance(other, TensorUElement):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __add__(self, other):
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        return TensorUElement(self.arity, _collect(list(self.terms.items()) + list(other.terms.items())))

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"TensorUElement({self.arity}, {len(self.terms)} terms)"


def tensor_product(factors: Sequence[UElement]) -> TensorUElement:
    """u_1 (x) ... (x) u_k."""
    terms = _collect(
        (tuple(w for w, _ in combo), _prod_coeffs(c for _, c in combo))
        for combo in product(*(u.terms.items() for u in factors)))
    return TensorUElement(len(factors), terms)


def _prod_coeffs(cs) -> Fraction:
    out = Fraction(1)
    for c in cs:
        out *= c
    return out


def word_coproduct(word: tuple, k: int) -> dict:
    """Delta^{k-1} of a single word: each letter is placed in one of k slots."""
    acc: dict = {}
    for placement in product(range(k), repeat=len(word)):
        parts = [[] for _ in range(k)]
        for letter, slot in zip(word, placement):
            parts[slot].append(letter)
        key = tuple(tuple(p) for p in parts)
        acc[key] = acc.get(key, 0) + 1
    return acc


def coproduct(u: UElement, k: int) -> TensorUElement:
    """Delta^{k-1}(u) in U^{(x) k}; Delta^{k-1}(1) = 1^{(x) k}."""
    if k < 1:
        raise ValueError("k must be >= 1")
    acc: dict = {}
    for w, c in u.terms.items():
        for key, mult in word_coproduct(w, k).items():
            acc[key] = acc.get(key, 0) + c * mult
    return TensorUElement(k, acc)


def coproduct_raw_count(u: UElement, k: int) -> int:
    """Number of tuples produced before like terms are collected."""
    return sum(k ** len(w) for w in u.terms)


def split_last(t: TensorUElement) -> TensorUElement:
    """(1^{(x) k-1} (x) Delta^1) applied to t."""
    acc: dict = {}
    for key, c in t.terms.items():
        for pair, mult in word_coproduct(key[-1], 2).items():
            new = key[:-1] + pair
            acc[new] = acc.get(new, 0) + c * mult
    return TensorUElement(t.arity + 1, acc)


# -- action on (V (x) A)^{(x) m}

def act_letter(letter: tuple, t: Tensor, spec: AlgebraSpec) -> Tensor:
    """Leibniz action of gen (x) b_b on every slot."""
    z, b = letter
    mul_row = spec.mul[b]
    acc: dict = {}
    for key, c in t.terms.items():
        for pos, (weight, coeff) in enumerate(key):
            nat = act_natural(z, weight)
            if not nat:
                continue
            prod_vec = mul_row[coeff]
            if not prod_vec:
                continue
            head, tail = key[:pos], key[pos + 1:]
            for w2, e in nat.items():
                for c2, f in prod_vec:
                    new = head + ((w2, c2),) + tail
                    acc[new] = acc.get(new, 0) + c * e * f
    return Tensor._raw(t.rank, {k: v for k, v in acc.items() if v})


def act_word(word: tuple, t: Tensor, spec: AlgebraSpec, memo: dict | None = None) -> Tensor:
    if memo is None:
        memo = {}
    if word in memo:
        return memo[word]
    if not word:
        out = t
    else:
        inner = act_word(word[1:], t, spec, memo)
        out = act_letter(word[0], inner, spec) if inner else inner
    memo[word] = out
    return out


def act(u: UElement, t: Tensor, spec: AlgebraSpec) -> Tensor:
    """u . t, sharing work between words with common suffixes."""
    memo: dict = {}
    acc: dict = {}
    for w, c in u.terms.items():
        res = act_word(w, t, spec, memo)
        for k, v in res.terms.items():
            acc[k] = acc.get(k, 0) + c * v
    return Tensor._raw(t.rank, {k: v for k, v in acc.items() if v})


def act_componentwise(tu: TensorUElement, t: Tensor, spec: AlgebraSpec) -> Tensor:
    """Apply component j of each term of ``tu`` to slot j of ``t``."""
    if tu.arity != t.rank:
        raise ValueError(f"arity {tu.arity} does not match tensor rank {t.rank}")
    slot_memo: dict = {}

    def on_slot(word, slot):
        key = (word, slot)
        if key not in slot_memo:
            slot_memo[key] = act_word(word, Tensor.pure([slot]), spec)
        return slot_memo[key]

    acc: dict = {}
    for key, c in t.terms.items():
        for words, d in tu.terms.items():
            out = Tensor.scalar(c * d)
            for word, slot in zip(words, key):
                out = out.tensor(on_slot(word, slot))
                if not out:
                    break
            for k, v in out.terms.items():
                acc[k] = acc.get(k, 0) + v
    return Tensor._raw(t.rank, {k: v for k, v in acc.items() if v})


# -- JSON

def letter_to_json(letter: tuple) -> list:
    z, b = letter
    return [z.encode(), b]


def letter_from_json(data) -> tuple:
    return (Gen.decode(data[0]), int(data[1]))


def u_to_json(u: UElement) -> dict:
    return {"terms": [
        {"coeff": format_rational(c), "word": [letter_to_json(l) for l in w]}
        for w, c in u.sorted_terms()]}


def u_from_json(data: dict) -> UElement:
    return UElement({
        tuple(letter_from_json(l) for l in term["word"]): parse_rational(term["coeff"])
        for term in data["terms"]})
