"""Noncommutative integer polynomials in ``a, b`` and in ``c, d``.

``c = a + b`` and ``d = ab + ba``; ``c`` has degree 1 and ``d`` degree 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import NotCDExpressibleError, NotSparseError, ParseError
from .flags import FlagVector, all_subsets

__all__ = [
    "WordPolynomial",
    "AlphaVector",
    "cd_monomials",
    "leading_ab_word",
    "expand_cd",
    "ab_to_cd",
    "psi_from_flag_h",
    "specialize_c1",
    "suffix_decompose",
    "truncate",
    "reassemble",
    "monomial_to_set",
    "set_to_monomial",
    "alpha_vector",
    "dominates",
    "cd_index",
]

AB = "ab"
CD = "cd"
_DEGREE = {"a": 1, "b": 1, "c": 1, "d": 2}


def _word_key(w):
    # degree first, then compare from the right end (c < d, a < b)
    return (sum(_DEGREE[ch] for ch in w), w[::-1])


class WordPolynomial:
    """Integer combination of words over ``{a, b}`` or ``{c, d}``."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: str, terms=None):
        if alphabet not in (AB, CD):
            raise ValueError(f"unknown alphabet {alphabet!r}")
        clean = {}
        for w, coeff in dict(terms or {}).items():
            if any(ch not in alphabet for ch in w):
                raise ValueError(f"word {w!r} is not over {alphabet!r}")
            if coeff:
                clean[w] = clean.get(w, 0) + int(coeff)
        self.alphabet = alphabet
        self.terms = {w: v for w, v in clean.items() if v}

    @classmethod
    def monomial(cls, word: str, coeff: int = 1, alphabet=None):
        alphabet = alphabet or (AB if set(word) <= set(AB) and word else CD)
        return cls(alphabet, {word: coeff})

    @classmethod
    def one(cls, alphabet=CD):
        return cls(alphabet, {"": 1})

    @classmethod
    def parse(cls, text: str, alphabet=None) -> "WordPolynomial":
        """Read ``1*ccc + 6*dc + 4*cd``; bare words mean coefficient 1."""
        text = text.strip()
        if text == "0":
            return cls(alphabet or CD)
        terms = {}
        letters = set()
        for raw in text.replace("-", "+-").split("+"):
            raw = raw.strip()
            if not raw:
                continue
            if "*" in raw:
                c, w = raw.split("*", 1)
                c = c.strip()
                coeff = int(c) if c not in ("", "-") else (-1 if c == "-" else 1)
            elif raw.lstrip("-").isdigit():
                coeff, w = int(raw), ""
            else:
                coeff, w = (-1, raw[1:]) if raw.startswith("-") else (1, raw)
            w = w.strip()
            if not set(w) <= set("abcd"):
                raise ParseError(f"bad term {raw!r}")
            letters |= set(w)
            terms[w] = terms.get(w, 0) + coeff
        if alphabet is None:
            if letters & set(AB) and letters & set(CD):
                raise ParseError("mixed alphabets")
            alphabet = AB if letters & set(AB) else CD
        return cls(alphabet, terms)

    def __repr__(self):
        return f"WordPolynomial({self.alphabet!r}, {str(self)!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{self.terms[w]}*{w}" for w in self.words())

    def words(self) -> list:
        return sorted(self.terms, key=_word_key)

    def __getitem__(self, word) -> int:
        return self.terms.get(word, 0)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({"": other} if other else {})
        if not isinstance(other, WordPolynomial):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return self.alphabet == other.alphabet and self.terms == other.terms

    def __hash__(self):
        return hash((self.alphabet, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def _coerce(self, other):
        if isinstance(other, int):
            return WordPolynomial(self.alphabet, {"": other})
        if not isinstance(other, WordPolynomial):
            return NotImplemented
        if other.alphabet != self.alphabet and self.terms and other.terms:
            raise ValueError("alphabets differ")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for w, v in other.terms.items():
            out[w] = out.get(w, 0) + v
        return WordPolynomial(self.alphabet if self.terms else other.alphabet, out)

    __radd__ = __add__

    def __neg__(self):
        return WordPolynomial(self.alphabet, {w: -v for w, v in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return WordPolynomial(self.alphabet, {w: v * other for w, v in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for w1, v1 in self.terms.items():
            for w2, v2 in other.terms.items():
                out[w1 + w2] = out.get(w1 + w2, 0) + v1 * v2
        return WordPolynomial(self.alphabet if self.terms else other.alphabet, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        out = WordPolynomial.one(self.alphabet)
        for _ in range(k):
            out = out * self
        return out

    @staticmethod
    def word_degree(word: str) -> int:
        return sum(_DEGREE[ch] for ch in word)

    def degrees(self) -> set:
        return {self.word_degree(w) for w in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int:
        """Common degree of a homogeneous polynomial (0 for the zero polynomial)."""
        degs = self.degrees()
        if len(degs) > 1:
            raise ValueError(f"{self} is not homogeneous")
        return degs.pop() if degs else 0

    def reversed(self) -> "WordPolynomial":
        return WordPolynomial(self.alphabet, {w[::-1]: v for w, v in self.terms.items()})


@lru_cache(maxsize=None)
def cd_monomials(n: int) -> tuple:
    """All cd-words of degree ``n``."""
    if n < 0:
        return ()
    if n == 0:
        return ("",)
    out = ["c" + w for w in cd_monomials(n - 1)]
    out += ["d" + w for w in cd_monomials(n - 2)]
    return tuple(out)


def leading_ab_word(word: str) -> str:
    """``c -> a``, ``d -> ab``: the lexicographically least word in the expansion."""
    return word.replace("c", "a").replace("d", "ab")


@lru_cache(maxsize=4096)
def _expand_word(word: str) -> tuple:
    pieces = [("a", "b") if ch == "c" else ("ab", "ba") for ch in word]
    return tuple("".join(choice) for choice in product(*pieces))


def expand_cd(phi: WordPolynomial) -> WordPolynomial:
    out = {}
    for w, v in phi.terms.items():
        for ab in _expand_word(w):
            out[ab] = out.get(ab, 0) + v
    return WordPolynomial(AB, out)


def ab_to_cd(psi: WordPolynomial) -> WordPolynomial:
    """Rewrite a homogeneous ab-polynomial in ``c`` and ``d``.

    CD monomials are processed in increasing order of their leading ab-word;
    the residual coefficient on that word is the cd-coefficient because every
    other word in the expansion of a monomial is lexicographically larger.
    """
    if psi.alphabet != AB and psi.terms:
        raise ValueError("expected an ab-polynomial")
    n = psi.degree
    residual = dict(psi.terms)
    result = {}
    for w in sorted(cd_monomials(n), key=leading_ab_word):
        coeff = residual.get(leading_ab_word(w), 0)
        if not coeff:
            continue
        result[w] = coeff
        for ab in _expand_word(w):
            residual[ab] = residual.get(ab, 0) - coeff
    leftover = WordPolynomial(AB, residual)
    if leftover:
        raise NotCDExpressibleError(leftover)
    return WordPolynomial(CD, result)


def psi_from_flag_h(fh: FlagVector) -> WordPolynomial:
    """``sum_S h_S u_S`` with ``u_i = b`` iff ``i`` is in ``S``."""
    terms = {}
    for s, v in fh.items():
        terms["".join("b" if i in s else "a" for i in range(1, fh.n + 1))] = v
    return WordPolynomial(AB, terms)


def specialize_c1(phi: WordPolynomial) -> list:
    """``Phi(1, d)`` as the list ``(delta_0, delta_1, ...)``."""
    n = phi.degree
    delta = [0] * (n // 2 + 1)
    for w, v in phi.terms.items():
        delta[w.count("d")] += v
    return delta


def _split_suffix(word: str, n: int):
    last = word.rfind("d")
    if last < 0:
        return 0, ""
    tail = len(word) - last - 1
    return n - tail, word[:last]


def suffix_decompose(phi: WordPolynomial) -> dict:
    """Buckets ``k -> Phi_k`` with ``Phi = Phi_0 + sum_k Phi_k d c^{n-k}``.

    ``Phi_0`` is the pure c-power part (``alpha * c^n``); ``Phi_k`` for
    ``2 <= k <= n`` has degree ``k - 2``.  Every key is present.
    """
    n = phi.degree
    buckets = {k: {} for k in [0] + list(range(2, n + 1))}
    for w, v in phi.terms.items():
        k, prefix = _split_suffix(w, n)
        key = w if k == 0 else prefix
        buckets[k][key] = buckets[k].get(key, 0) + v
    return {k: WordPolynomial(CD, t) for k, t in buckets.items()}


def reassemble(buckets: dict, n: int) -> WordPolynomial:
    out = WordPolynomial(CD)
    for k, part in buckets.items():
        if k == 0:
            out = out + part
        else:
            out = out + part * WordPolynomial(CD, {"d" + "c" * (n - k): 1})
    return out


def truncate(phi: WordPolynomial, k: int) -> WordPolynomial:
    """``Phi_{<=k}``: the terms whose last ``d`` ends by position ``k``."""
    n = phi.degree
    return WordPolynomial(CD, {w: v for w, v in phi.terms.items()
                               if _split_suffix(w, n)[0] <= k})


def monomial_to_set(word: str) -> frozenset:
    """``F_w``: the set of degree positions (1-based) at which each ``d`` starts."""
    out = []
    pos = 0
    for ch in word:
        if ch == "d":
            out.append(pos + 1)
            pos += 2
        elif ch == "c":
            pos += 1
        else:
            raise ValueError(f"{word!r} is not a cd-word")
    return frozenset(out)


def set_to_monomial(s, n: int) -> str:
    """Inverse of :func:`monomial_to_set` for sparse subsets of ``[n-1]``."""
    members = sorted(s)
    if any(not 1 <= x <= n - 1 for x in members):
        raise ValueError(f"{members} is not a subset of [{n - 1}]")
    if any(b - a < 2 for a, b in zip(members, members[1:])):
        raise NotSparseError(f"{members} has consecutive elements")
    word = []
    cursor = 0
    for x in members:
        word.append("c" * (x - 1 - cursor) + "d")
        cursor = x + 1
    word.append("c" * (n - cursor))
    return "".join(word)


def is_sparse(s) -> bool:
    members = sorted(s)
    return all(b - a >= 2 for a, b in zip(members, members[1:]))


@dataclass(frozen=True)
class AlphaVector:
    """cd-coefficients re-indexed by the sparse subsets of ``[n-1]``."""

    n: int
    values: dict

    def __getitem__(self, s) -> int:
        return self.values.get(frozenset(s), 0)

    def items(self):
        return [(s, self[s]) for s in all_subsets(max(self.n - 1, 0))]

    def singletons(self) -> dict:
        return {i: self[{i}] for i in range(1, self.n)}


def alpha_vector(phi: WordPolynomial) -> AlphaVector:
    n = phi.degree
    values = {s: 0 for s in all_subsets(max(n - 1, 0))}
    for w, v in phi.terms.items():
        values[monomial_to_set(w)] = v
    return AlphaVector(n, values)


def dominates(p: WordPolynomial, q: WordPolynomial) -> bool:
    """Coefficientwise ``p >= q``; missing words count as zero."""
    return all(p[w] >= q[w] for w in set(p.terms) | set(q.terms))


def cd_index(poset, jobs: int = 1) -> WordPolynomial:
    """cd-index of an Eulerian poset (raises if it has none)."""
    from .flags import flag_f, flag_h

    return ab_to_cd(psi_from_flag_h(flag_h(flag_f(poset, jobs=jobs))))
