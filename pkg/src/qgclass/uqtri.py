"""Degree-truncated triangular subalgebras as quotients of free algebras.

The lowering (or, by mirroring, raising) subalgebra is realized per weight:
the component of weight beta is the span of all letter words of that weight
modulo the graded component of the two-sided q-Serre ideal, computed by
exact linear algebra over Q(v).  Words are tuples of 0-based letter indices;
the word (l1, .., lt) stands for the product f_{l1} f_{l2} ... f_{lt}
(the rightmost factor acts first on a module).

Basis selection: the quotient basis at each weight consists of the
deglex-least words outside the span of the ideal (letters ordered
f_1 < .. < f_n), which makes all normal forms deterministic.
"""

from __future__ import annotations

from functools import lru_cache

from .rootdatum import build_datum, serre_relations
from .scalars import ONE, ZERO, vpower

__all__ = ["GradedBasis", "Element", "CutoffError", "serre_quotient"]


class CutoffError(ValueError):
    """A product left the stored height range."""


def _wadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _wsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


class GradedBasis:
    """Per-weight bases and rewrite maps of the Serre quotient."""

    def __init__(self, datum, cutoff):
        self.datum = datum
        self.cutoff = cutoff
        self.n = datum.n
        self._words = {(0,) * self.n: [()]}
        self._basis = {(0,) * self.n: [()]}
        self._rewrite = {(0,) * self.n: {(): {0: ONE}}}
        self._echelon = {(0,) * self.n: {}}
        self._serre = serre_relations(datum)
        for h in range(1, cutoff + 1):
            for beta in self._weights_at(h):
                self._build_weight(beta)

    # -- enumeration ----------------------------------------------------------

    def _weights_at(self, h):
        def comps(total, parts):
            if parts == 1:
                yield (total,)
                return
            for first in range(total + 1):
                for rest in comps(total - first, parts - 1):
                    yield (first,) + rest
        return sorted(comps(h, self.n))

    def weights_up_to(self, h):
        out = []
        for hh in range(0, min(h, self.cutoff) + 1):
            for beta in self._weights_at(hh):
                if beta in self._basis:
                    out.append(beta)
        return out

    def words(self, beta):
        beta = tuple(beta)
        if beta not in self._words:
            ws = []
            for i in range(self.n):
                if beta[i] > 0:
                    down = tuple(beta[k] - (1 if k == i else 0) for k in range(self.n))
                    ws.extend((i,) + w for w in self.words(down))
            self._words[beta] = sorted(set(ws))
        return self._words[beta]

    def basis(self, beta):
        return self._basis[tuple(beta)]

    def dimension(self, beta):
        return len(self._basis[tuple(beta)])

    # -- quotient construction -------------------------------------------------

    def _build_weight(self, beta):
        words = self.words(beta)
        rows = []
        # left multiples of the ideal at lower weights
        for i in range(self.n):
            if beta[i] == 0:
                continue
            down = tuple(beta[k] - (1 if k == i else 0) for k in range(self.n))
            for row in self._echelon.get(down, {}).values():
                rows.append({(i,) + w: c for w, c in row.items()})
        # Serre elements times a right word
        for gamma, terms in self._serre:
            rest = _wsub(beta, gamma)
            if any(c < 0 for c in rest):
                continue
            for w in self.words(rest):
                rows.append({sw + w: c for sw, c in terms})

        ech = {}
        for row in rows:
            row = dict(row)
            while row:
                p = max(row)
                if p not in ech:
                    break
                c = row.pop(p)
                for w, cc in ech[p].items():
                    if w == p:
                        continue
                    s = row.get(w, ZERO) - c * cc
                    if s.is_zero():
                        row.pop(w, None)
                    else:
                        row[w] = s
            if row:
                p = max(row)
                inv = row[p].inv()
                row = {w: c * inv for w, c in row.items()}
                ech[p] = row
        # back-substitute (ascending pivots: tails then contain no pivots)
        for p in sorted(ech):
            row = ech[p]
            for t in [w for w in row if w != p and w in ech]:
                c = row.pop(t)
                for w, cc in ech[t].items():
                    if w == t:
                        continue
                    s = row.get(w, ZERO) - c * cc
                    if s.is_zero():
                        row.pop(w, None)
                    else:
                        row[w] = s
        basis = [w for w in words if w not in ech]
        index = {w: k for k, w in enumerate(basis)}
        rewrite = {}
        for w in basis:
            rewrite[w] = {index[w]: ONE}
        for p, row in ech.items():
            rewrite[p] = {index[w]: -c for w, c in row.items() if w != p}
        self._basis[beta] = basis
        self._rewrite[beta] = rewrite
        self._echelon[beta] = ech

    def rewrite(self, word):
        """Normal form of a free word: sparse vector over the weight's basis."""
        beta = self.weight_of(word)
        if sum(beta) > self.cutoff:
            raise CutoffError("word of height %d exceeds cutoff %d"
                              % (sum(beta), self.cutoff))
        return self._rewrite[beta][word]

    def weight_of(self, word):
        beta = [0] * self.n
        for l in word:
            beta[l] += 1
        return tuple(beta)

    # -- elements ---------------------------------------------------------------

    def zero(self, beta):
        return Element(self, tuple(beta), {})

    def one(self):
        return Element(self, (0,) * self.n, {(): ONE})

    def generator(self, i):
        beta = tuple(1 if k == i else 0 for k in range(self.n))
        return Element(self, beta, {(i,): ONE})

    def from_word(self, word):
        beta = self.weight_of(word)
        vec = self.rewrite(word)
        basis = self._basis[beta]
        return Element(self, beta, {basis[k]: c for k, c in vec.items()})


class Element:
    """Homogeneous element of the quotient, stored over the weight's basis."""

    __slots__ = ("gb", "weight", "coeffs")

    def __init__(self, gb, weight, coeffs):
        self.gb = gb
        self.weight = tuple(weight)
        self.coeffs = {w: c for w, c in coeffs.items() if not c.is_zero()}

    def is_zero(self):
        return not self.coeffs

    def height(self):
        return sum(self.weight)

    def __add__(self, other):
        assert self.weight == other.weight or self.is_zero() or other.is_zero()
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            s = out.get(w, ZERO) + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        return Element(self.gb, other.weight if self.is_zero() else self.weight, out)

    def __sub__(self, other):
        return self + other.scale(-ONE)

    def scale(self, c):
        if c.is_zero():
            return Element(self.gb, self.weight, {})
        return Element(self.gb, self.weight, {w: c * cc for w, cc in self.coeffs.items()})

    def __mul__(self, other):
        gb = self.gb
        weight = _wadd(self.weight, other.weight)
        if sum(weight) > gb.cutoff:
            raise CutoffError("product height %d exceeds cutoff %d"
                              % (sum(weight), gb.cutoff))
        basis = gb._basis.get(weight)
        out = {}
        for wa, ca in self.coeffs.items():
            for wb, cb in other.coeffs.items():
                c = ca * cb
                for k, cc in gb._rewrite[weight][wa + wb].items():
                    w = basis[k]
                    s = out.get(w, ZERO) + c * cc
                    if s.is_zero():
                        out.pop(w, None)
                    else:
                        out[w] = s
        return Element(gb, weight, out)

    def qcommutator(self, other, c_exp):
        """[self, other]_{q^c} = self*other - q^c * other*self (q = v^2)."""
        return (self * other) - (other * self).scale(vpower(2 * c_exp))

    def coeff_of(self, word):
        return self.coeffs.get(tuple(word), ZERO)

    def __eq__(self, other):
        return (self.weight == other.weight and self.coeffs == other.coeffs) or \
            (self.is_zero() and other.is_zero())

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for w in sorted(self.coeffs):
            parts.append("(%s)*f%s" % (self.coeffs[w], "".join(str(l + 1) for l in w)))
        return " + ".join(parts)


@lru_cache(maxsize=None)
def serre_quotient(series, n, cutoff):
    """Graded basis of the Serre quotient for the given type, to the cutoff."""
    return GradedBasis(build_datum(series, n), cutoff)
