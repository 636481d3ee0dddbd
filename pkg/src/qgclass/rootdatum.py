"""Root systems B/C/D, the natural representation, posets and weight specs.

Conventions (fixed throughout the kernel):
  * rank n, N = 2n+1 (B) or 2n (C, D); indices are 0-based internally,
    printed 1-based; the dual index is i' = N-1-i.
  * weights of the natural basis w_0..w_{N-1}: eps_i for i < n, 0 for the
    middle index of B, -eps_{i'} for the rest; (eps_i, eps_j) = delta_ij.
  * simple roots alpha_i = eps_i - eps_{i+1} (i < n-1) and
    alpha_{n-1} = eps_{n-1} (B), 2 eps_{n-1} (C), eps_{n-2}+eps_{n-1} (D).

A torus point is encoded by nonzero Gaussian rationals s_i standing for
the exponentials e^{(lambda0, eps_i)}; the stabilizer root system is
detected multiplicatively, prod_i s_i^{2 alpha_i} = 1.  Blocks of the
torus matrix sitting at eigenvalue -1 need s_i = +-i, which is why the
scalars carry the Gaussian unit; generic and Levi data stay rational.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .scalars import (
    ExponentError, GaussRat, lambda_power, monomial, parse_gauss, qnum, ONE, ZERO)

__all__ = [
    "RootDatum",
    "NaturalRep",
    "PosetData",
    "WeightSpec",
    "SignedPermutation",
    "SpecError",
    "build_datum",
    "stabilizer_from_spec",
    "weyl_shifted",
    "kostant_partitions",
    "serre_relations",
    "verify_natural_relations",
    "hasse_text",
]


class SpecError(ValueError):
    """A weight specification violates the construction rules."""


def _vec(*xs):
    return tuple(Fraction(x) for x in xs)


def _add(u, w):
    return tuple(a + b for a, b in zip(u, w))


def _sub(u, w):
    return tuple(a - b for a, b in zip(u, w))


def _neg(u):
    return tuple(-a for a in u)


def _dot(u, w):
    return sum(a * b for a, b in zip(u, w))


def _scale(c, u):
    c = Fraction(c)
    return tuple(c * a for a in u)


class NaturalRep:
    """Chevalley generator action on C^N as index maps (all entries 0/1)."""

    def __init__(self, n, fmaps, emaps, lengths):
        self.n = n
        self.fmaps = fmaps      # fmaps[k]: dict l -> r, f_k sends w_l to w_r
        self.emaps = emaps      # emaps[k]: dict r -> l
        self.lengths = lengths  # arrow length per letter (2 for the D fork)

    def apply_f(self, k, i):
        return self.fmaps[k].get(i)

    def apply_e(self, k, i):
        return self.emaps[k].get(i)


class PosetData:
    """Reachability order on the index set with principal monomials."""

    def __init__(self, n_nodes, edges, leq, psi, dist):
        self.n_nodes = n_nodes
        self.edges = edges   # list of (l, r, letter)
        self.leq = leq       # leq[i][j] True iff i <= j in the order
        self.psi = psi       # psi[(i, j)] = letter tuple of psi^{ij}
        self.dist = dist     # dist[(i, j)] = number of arrows

    def comparable(self, i, j):
        return self.leq[i][j]

    def strict_pairs(self):
        return [(i, j) for i in range(self.n_nodes)
                for j in range(self.n_nodes) if i != j and self.leq[i][j]]

    def interval(self, i, j):
        return [k for k in range(self.n_nodes) if self.leq[i][k] and self.leq[k][j]]


class RootDatum:
    """Type B/C/D root datum plus natural representation and poset data."""

    def __init__(self, series, n):
        if series not in ("B", "C", "D"):
            raise SpecError("unsupported series %r" % (series,))
        if n < 1 or (series == "D" and n < 2):
            raise SpecError("rank %d not supported for series %s" % (n, series))
        self.series = series
        self.n = n
        self.N = 2 * n + 1 if series == "B" else 2 * n

        self.weights = self._weights()
        self.alphas = self._simple_roots()
        self.pos_roots = self._positive_roots()
        self.rho = _scale(Fraction(1, 2), _vec(*[0] * n))
        for a in self.pos_roots:
            self.rho = _add(self.rho, _scale(Fraction(1, 2), a))
        self._alpha_inv = self._invert_alpha_matrix()
        self.natural = self._build_natural()
        self.poset = self._build_poset()

    # -- construction ---------------------------------------------------------

    def _weights(self):
        n, N = self.n, self.N
        out = []
        for i in range(N):
            v = [Fraction(0)] * n
            if i < n:
                v[i] = Fraction(1)
            elif self.series == "B" and i == n:
                pass
            else:
                v[N - 1 - i] = Fraction(-1)
            out.append(tuple(v))
        return out

    def _simple_roots(self):
        n = self.n
        alphas = []
        for i in range(n - 1):
            v = [Fraction(0)] * n
            v[i], v[i + 1] = Fraction(1), Fraction(-1)
            alphas.append(tuple(v))
        last = [Fraction(0)] * n
        if self.series == "B":
            last[n - 1] = Fraction(1)
        elif self.series == "C":
            last[n - 1] = Fraction(2)
        else:
            if n >= 2:
                last[n - 2] = Fraction(1)
            last[n - 1] = Fraction(1)
        alphas.append(tuple(last))
        return alphas

    def _positive_roots(self):
        n = self.n
        roots = []
        for i in range(n):
            for j in range(i + 1, n):
                v = [Fraction(0)] * n
                v[i], v[j] = Fraction(1), Fraction(-1)
                roots.append(tuple(v))
                v2 = [Fraction(0)] * n
                v2[i], v2[j] = Fraction(1), Fraction(1)
                roots.append(tuple(v2))
        if self.series == "B":
            for i in range(n):
                v = [Fraction(0)] * n
                v[i] = Fraction(1)
                roots.append(tuple(v))
        elif self.series == "C":
            for i in range(n):
                v = [Fraction(0)] * n
                v[i] = Fraction(2)
                roots.append(tuple(v))
        return roots

    def _invert_alpha_matrix(self):
        n = self.n
        m = [[self.alphas[j][i] for j in range(n)] for i in range(n)]
        inv = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if m[r][col] != 0)
            m[col], m[piv] = m[piv], m[col]
            inv[col], inv[piv] = inv[piv], inv[col]
            d = m[col][col]
            m[col] = [x / d for x in m[col]]
            inv[col] = [x / d for x in inv[col]]
            for r in range(n):
                if r != col and m[r][col] != 0:
                    f = m[r][col]
                    m[r] = [x - f * y for x, y in zip(m[r], m[col])]
                    inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
        return inv

    def _build_natural(self):
        fmaps, emaps, lengths = [], [], []
        for k in range(self.n):
            pairs = self.pairs_of(self.alphas[k])
            fmaps.append({l: r for (l, r) in pairs})
            emaps.append({r: l for (l, r) in pairs})
            length = 2 if (self.series == "D" and k == self.n - 1) else 1
            lengths.append(length)
        return NaturalRep(self.n, fmaps, emaps, lengths)

    def _build_poset(self):
        N = self.N
        edges = []
        for k in range(self.n):
            for l, r in sorted(self.natural.fmaps[k].items()):
                edges.append((l, r, k))
        succ = {i: [] for i in range(N)}
        for l, r, k in edges:
            succ[l].append((r, k))
        for i in succ:
            succ[i].sort()
        leq = [[False] * N for _ in range(N)]
        psi = {}
        dist = {}
        # index order refines the poset; fill from the bottom up so that
        # psi[(m, j)] for m > i is available when psi[(i, j)] is built
        for i in range(N - 1, -1, -1):
            leq[i][i] = True
            psi[(i, i)] = ()
            dist[(i, i)] = 0
            for j in range(i + 1, N):
                for m, k in succ[i]:
                    if m == j:
                        leq[i][j] = True
                        psi[(i, j)] = (k,)
                        dist[(i, j)] = 1
                        break
                    if m < j and leq[m][j]:
                        leq[i][j] = True
                        psi[(i, j)] = (k,) + psi[(m, j)]
                        dist[(i, j)] = 1 + dist[(m, j)]
                        break
        return PosetData(N, edges, leq, psi, dist)

    # -- basic queries ----------------------------------------------------------

    def dual_index(self, i):
        return self.N - 1 - i

    def inner(self, u, w):
        return _dot(u, w)

    def alpha_coords(self, mu):
        """Coordinates of mu in the simple-root basis (Fractions)."""
        return tuple(_dot(row, mu) for row in self._alpha_inv)

    def eps_of_alpha(self, coords):
        v = tuple(Fraction(0) for _ in range(self.n))
        for c, a in zip(coords, self.alphas):
            if c:
                v = _add(v, _scale(c, a))
        return v

    def height(self, mu):
        h = sum(self.alpha_coords(mu))
        return h

    def pairs_of(self, beta):
        """P(beta): ordered pairs (l, r) with wt_l - wt_r = beta."""
        out = []
        for l in range(self.N):
            for r in range(self.N):
                if l != r and _sub(self.weights[l], self.weights[r]) == tuple(beta):
                    out.append((l, r))
        return out

    def norm2(self, mu):
        return _dot(mu, mu)

    def q_alpha_exp(self, k):
        """Exponent a with q_{alpha_k} = v^a, i.e. a = (alpha_k, alpha_k)."""
        return int(self.norm2(self.alphas[k]))

    def cartan_integer(self, i, j):
        return int(2 * _dot(self.alphas[i], self.alphas[j]) / self.norm2(self.alphas[i]))

    def comparable_diff_heights(self):
        """Heights of eps_i - eps_j over strictly comparable pairs."""
        out = set()
        for i, j in self.poset.strict_pairs():
            d = _sub(self.weights[i], self.weights[j])
            out.add(int(self.height(d)))
        return out

    def rho_i(self, i):
        return _dot(self.rho, self.weights[i])

    def __repr__(self):
        return "RootDatum(%s%d)" % (self.series, self.n)


@lru_cache(maxsize=None)
def build_datum(series, n):
    """Root datum + natural representation + poset for the given type."""
    return RootDatum(series, int(n))


# ---------------------------------------------------------------------------
# Kostant partition counts (independent brute-force oracle)
# ---------------------------------------------------------------------------

def kostant_partitions(datum, beta_alpha):
    """Number of ways to write beta (simple-root coordinates) as a sum of
    positive roots, by direct enumeration."""
    roots = sorted(
        tuple(int(c) for c in datum.alpha_coords(r)) for r in datum.pos_roots
    )

    @lru_cache(maxsize=None)
    def count(rest, idx):
        if all(c == 0 for c in rest):
            return 1
        if idx == len(roots):
            return 0
        total = count(rest, idx + 1)
        r = roots[idx]
        cur = rest
        while all(a >= b for a, b in zip(cur, r)):
            cur = tuple(a - b for a, b in zip(cur, r))
            total += count(cur, idx + 1)
        return total

    return count(tuple(int(c) for c in beta_alpha), 0)


# ---------------------------------------------------------------------------
# q-Serre relations (shared by the natural-representation check and the
# free-algebra quotient)
# ---------------------------------------------------------------------------

def serre_relations(datum):
    """All q-Serre elements as (alpha-weight, [(letter word, Scalar coeff)])."""
    from .scalars import qbinomial_base

    rels = []
    n = datum.n
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            a_ij = datum.cartan_integer(i, j)
            m = 1 - a_ij
            base = datum.q_alpha_exp(i)
            terms = []
            for k in range(m + 1):
                coeff = qbinomial_base(m, k, base)
                if k % 2:
                    coeff = -coeff
                word = (i,) * (m - k) + (j,) + (i,) * k
                terms.append((word, coeff))
            weight = [0] * n
            weight[i] += m
            weight[j] += 1
            rels.append((tuple(weight), terms))
    return rels


def verify_natural_relations(datum):
    """Exact check of the defining relations on the natural representation.

    Returns a list of (name, ok) pairs; all must be True.
    """
    nat, n = datum.natural, datum.n
    results = []

    def apply_word(word, i):
        # image index of w_i under the f-letter word (rightmost acts first)
        for k in reversed(word):
            i = nat.apply_f(k, i)
            if i is None:
                return None
        return i

    # [e_k, f_l] = delta_kl [h_{alpha_k}]_q / [(alpha,alpha)/2]_q, entries
    # read as q-numbers of the natural weights; all entries are integers.
    ok = True
    for k in range(n):
        for l in range(n):
            for i in range(datum.N):
                val = 0
                j = nat.apply_f(l, i)
                if j is not None and nat.apply_e(k, j) == i:
                    val += 1
                j = nat.apply_e(k, i)
                if j is not None and nat.apply_f(l, j) == i:
                    val -= 1
                if k != l:
                    expect = ZERO
                elif datum.series == "B" and k == n - 1:
                    expect = qnum(_dot(datum.alphas[k], datum.weights[i]))
                else:
                    half = Fraction(datum.norm2(datum.alphas[k]), 2)
                    expect = qnum(_dot(datum.alphas[k], datum.weights[i])) / qnum(half)
                got = monomial(val, 0)
                if got != expect:
                    ok = False
    results.append(("commutation [e,f]", ok))

    # q-Serre relations hold for the pi matrices (both signs).
    ok = True
    for weight, terms in serre_relations(datum):
        for i in range(datum.N):
            acc_f = {}
            acc_e = {}
            for word, coeff in terms:
                jf = apply_word(word, i)
                if jf is not None:
                    acc_f[jf] = acc_f.get(jf, ZERO) + coeff
                je = i
                for k in reversed(word):
                    je = nat.apply_e(k, je) if je is not None else None
                if je is not None:
                    acc_e[je] = acc_e.get(je, ZERO) + coeff
            if any(not c.is_zero() for c in acc_f.values()):
                ok = False
            if any(not c.is_zero() for c in acc_e.values()):
                ok = False
    results.append(("q-Serre on natural rep", ok))

    # principal monomials realize the paths: psi_{ji} w_i = w_j exactly
    # (psi^{ij} lists the arrows from i toward j, psi_{ji} is the reversed
    # product, whose rightmost factor acts first)
    ok = True
    for (i, j), word in datum.poset.psi.items():
        if apply_word(tuple(reversed(word)), i) != j:
            ok = False
        if datum.poset.dist[(i, j)] != len(word):
            ok = False
    results.append(("principal paths", ok))

    # psi^{ij} = psi^{im} psi^{mj} for i <= m <= j; in type D the two fork
    # letters commute and words are compared in the pinned canonical order
    ok = True
    for i, j in datum.poset.strict_pairs():
        ref = canonical_word(datum, datum.poset.psi[(i, j)])
        for m in datum.poset.interval(i, j):
            cat = canonical_word(
                datum, datum.poset.psi[(i, m)] + datum.poset.psi[(m, j)])
            if ref != cat:
                ok = False
    results.append(("path additivity", ok))
    return results


def canonical_word(datum, word):
    """Normalize the order of adjacent commuting D-fork letters."""
    if datum.series != "D":
        return tuple(word)
    a, b = datum.n - 2, datum.n - 1
    w = list(word)
    changed = True
    while changed:
        changed = False
        for t in range(len(w) - 1):
            if w[t] == b and w[t + 1] == a:
                w[t], w[t + 1] = a, b
                changed = True
    return tuple(w)


# ---------------------------------------------------------------------------
# signed permutations (the Weyl group)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SignedPermutation:
    """A signed permutation of {0..n-1}: i maps to perm[i] with sign signs[i]."""

    perm: tuple
    signs: tuple

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)) or len(self.signs) != n:
            raise SpecError("invalid signed permutation")
        if any(s not in (1, -1) for s in self.signs):
            raise SpecError("signs must be +-1")

    @staticmethod
    def identity(n):
        return SignedPermutation(tuple(range(n)), (1,) * n)

    def validate_for(self, series):
        if series == "D" and sum(1 for s in self.signs if s < 0) % 2:
            raise SpecError("type D requires an even number of sign flips")

    def apply_weight(self, mu):
        out = [Fraction(0)] * len(self.perm)
        for i, m in enumerate(mu):
            out[self.perm[i]] = self.signs[i] * Fraction(m)
        return tuple(out)

    def apply_s(self, s):
        from .scalars import GaussRat as _G

        def conv(x):
            return x if isinstance(x, _G) else _G(Fraction(x))

        out = [None] * len(self.perm)
        for i, si in enumerate(s):
            si = conv(si)
            out[self.perm[i]] = si if self.signs[i] > 0 else si.inv()
        return tuple(out)

    def compose(self, other):
        """self after other (self o other)."""
        n = len(self.perm)
        perm = tuple(self.perm[other.perm[i]] for i in range(n))
        signs = tuple(self.signs[other.perm[i]] * other.signs[i] for i in range(n))
        return SignedPermutation(perm, signs)


# ---------------------------------------------------------------------------
# weight specifications and stabilizer data
# ---------------------------------------------------------------------------

@dataclass
class WeightSpec:
    """A highest weight lambda = lambda0/hbar + lambda1 with stabilizer data.

    ``s`` holds the torus constants (one per eps_i), ``lambda1`` the finite
    part in eps-coordinates.  Derived fields describe the stabilizer root
    system detected from s and the resonance pattern of the pair (s, lambda1).
    """

    datum: RootDatum
    s: tuple
    lambda1: tuple
    r_k_pos: list = field(default_factory=list)
    pi_k: list = field(default_factory=list)
    rho_k: tuple = ()
    i_k: list = field(default_factory=list)
    pseudo_levi: bool = False
    designed_pairs: list = field(default_factory=list)
    spurious_pairs: list = field(default_factory=list)

    @property
    def n(self):
        return self.datum.n

    def s_ext(self, i):
        """Torus constant of the i-th natural weight (0-based index in I)."""
        n, N = self.datum.n, self.datum.N
        if i < n:
            return self.s[i]
        if self.datum.series == "B" and i == n:
            return GaussRat(1)
        return self.s[N - 1 - i].inv()

    def bar_i_k(self):
        return [j for j in range(self.datum.N) if j not in self.i_k]

    def q_lambda_power(self, mu):
        return lambda_power(mu, self)

    def eta_monomial(self, i, j):
        """q^{eta_ij} at lambda, a monomial scalar.

        eta_ij = (lambda + rho, eps_i - eps_j) - ||eps_i - eps_j||^2 / 2.
        """
        d = _sub(self.datum.weights[i], self.datum.weights[j])
        expo = 2 * _dot(self.datum.rho, d) - _dot(d, d)
        if expo.denominator != 1:
            raise ExponentError("non-integral eta exponent")
        return self.q_lambda_power(d) * monomial(1, int(expo))

    def is_resonant(self, i, j):
        m = self.eta_monomial(i, j)
        r = m.as_rational()
        return r is not None and (r == 1 or r == -1)

    def describe(self):
        lines = ["series %s rank %d" % (self.datum.series, self.datum.n)]
        lines.append("s = (%s)" % ", ".join(str(x) for x in self.s))
        lines.append("lambda1 = (%s)" % ", ".join(str(x) for x in self.lambda1))
        lines.append("stabilizer positive roots: %s"
                     % (", ".join(_root_str(r) for r in self.r_k_pos) or "none"))
        lines.append("stabilizer simple roots: %s"
                     % (", ".join(_root_str(r) for r in self.pi_k) or "none"))
        lines.append("I_k = {%s}" % ", ".join(str(i + 1) for i in self.i_k))
        lines.append("pseudo-Levi: %s" % ("yes" if self.pseudo_levi else "no"))
        if self.spurious_pairs:
            lines.append("spurious resonant pairs: %s"
                         % ", ".join("(%d,%d)" % (i + 1, j + 1) for i, j in self.spurious_pairs))
        return "\n".join(lines)


def _root_str(r):
    names = []
    for i, c in enumerate(r):
        if c:
            c = Fraction(c)
            txt = "" if abs(c) == 1 else str(abs(c))
            names.append(("-" if c < 0 else "+") + txt + "e%d" % (i + 1))
    out = " ".join(names)
    return out[1:] if out.startswith("+") else out


def _to_gauss(x):
    if isinstance(x, GaussRat):
        return x
    if isinstance(x, str):
        return parse_gauss(x)
    return GaussRat(Fraction(x))


def stabilizer_from_spec(s, lambda1, datum, require_c_reg=True):
    """Build a WeightSpec: detect R_k and I_k from s and validate lambda1.

    The multiplicative detection rule is prod_i s_i^{2 alpha_i} = 1 on the
    eps-coordinates of each root (the torus matrix entries are the s_i^2).
    """
    n = datum.n
    s = tuple(_to_gauss(x) for x in s)
    lambda1 = tuple(Fraction(x) for x in lambda1)
    if len(s) != n or len(lambda1) != n:
        raise SpecError("need %d torus constants and lambda1 coordinates" % n)
    if any(x.is_zero() for x in s):
        raise SpecError("torus constants must be nonzero")
    if any((2 * x).denominator != 1 for x in lambda1):
        raise SpecError("lambda1 coordinates must be half-integers")

    def s_power(root):
        out = GaussRat(1)
        for i, c in enumerate(root):
            ci = Fraction(c)
            if ci:
                out = out * (s[i] ** (2 * int(ci)))
        return out

    r_k_pos = [r for r in datum.pos_roots if s_power(r) == GaussRat(1)]
    rset = set(r_k_pos)
    pi_k = [r for r in r_k_pos
            if not any(_sub(r, b) in rset for b in r_k_pos if b != r)]
    rho_k = tuple(Fraction(0) for _ in range(n))
    for r in r_k_pos:
        rho_k = _add(rho_k, _scale(Fraction(1, 2), r))

    # lambda1 must equal (rho_k - rho) plus a vector orthogonal to R_k
    resid = _sub(lambda1, _sub(rho_k, datum.rho))
    for r in r_k_pos:
        if _dot(resid, r) != 0:
            if require_c_reg:
                raise SpecError(
                    "lambda1 is not in C*_{k,reg}: lambda1 - (rho_k - rho) must be "
                    "orthogonal to the stabilizer root %s" % (_root_str(r),))

    # I_k: indices with no incoming arrow from the stabilizer root system
    incoming = set()
    for r in r_k_pos:
        for l, rr in datum.pairs_of(r):
            incoming.add(rr)
    i_k = [j for j in range(datum.N) if j not in incoming]

    plus_block = any(x * x == GaussRat(1) for x in s) or datum.series == "B"
    minus_block = any(x * x == GaussRat(-1) for x in s)
    spec = WeightSpec(
        datum=datum, s=s, lambda1=lambda1, r_k_pos=r_k_pos, pi_k=pi_k,
        rho_k=rho_k, i_k=i_k, pseudo_levi=(plus_block and minus_block and bool(r_k_pos)),
    )

    designed = set()
    for a in pi_k:
        for pair in datum.pairs_of(a):
            designed.add(pair)
    spurious = []
    for i, j in datum.poset.strict_pairs():
        if (i, j) in designed:
            if not spec.is_resonant(i, j):
                raise SpecError(
                    "designed resonance fails at pair (%d,%d); lambda1 does not "
                    "match rho_k - rho on the stabilizer block" % (i + 1, j + 1))
        elif spec.is_resonant(i, j):
            spurious.append((i, j))
    spec.designed_pairs = sorted(designed)
    spec.spurious_pairs = spurious
    return spec


def weyl_shifted(sigma, spec):
    """The shifted Weyl action on a weight spec: s' = sigma(s) and
    lambda1' = sigma(lambda1 + rho) - rho, with stabilizer data recomputed."""
    datum = spec.datum
    sigma.validate_for(datum.series)
    s2 = sigma.apply_s(spec.s)
    lam2 = _sub(sigma.apply_weight(_add(spec.lambda1, datum.rho)), datum.rho)
    out = stabilizer_from_spec(s2, lam2, datum)
    expect = {sigma.apply_weight(r) for r in spec.r_k_pos}
    expect = {r if _is_positive(r, datum) else _neg(r) for r in expect}
    if expect != set(out.r_k_pos):
        raise SpecError("stabilizer is not Weyl-equivariant (internal error)")
    return out


def _is_positive(root, datum):
    co = datum.alpha_coords(root)
    return all(c >= 0 for c in co)


# ---------------------------------------------------------------------------
# text rendering for the CLI
# ---------------------------------------------------------------------------

def hasse_text(datum):
    """One-line-per-arrow rendering of the representation diagram."""
    names = []
    for i in range(datum.N):
        names.append("w%d" % (i + 1))
    lines = ["natural representation diagram (%s%d, N=%d)"
             % (datum.series, datum.n, datum.N)]
    for l, r, k in datum.poset.edges:
        lines.append("  %s --f%d--> %s" % (names[l], k + 1, names[r]))
    return "\n".join(lines)


def describe_text(datum):
    lines = [repr(datum)]
    lines.append("simple roots: %s" % ", ".join(_root_str(a) for a in datum.alphas))
    lines.append("positive roots (%d): %s"
                 % (len(datum.pos_roots), ", ".join(_root_str(r) for r in datum.pos_roots)))
    lines.append("rho = (%s)" % ", ".join(str(c) for c in datum.rho))
    lines.append(hasse_text(datum))
    return "\n".join(lines)
