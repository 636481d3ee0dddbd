"""Truncated Verma modules, generalized parabolic quotients, and the
standard filtration of C^N tensor M.

Module vectors are stored per weight lambda - beta (beta in simple-root
coordinates, height bounded by the storage depth) in the deglex word basis
of the lowering subalgebra; quotients prune that basis against the kernel
generated by singular vectors.  The raising action is computed by
commuting e past the word letters, so every stored relation is exact.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import ONE, ZERO, monomial, qnum, qnum_of_monomial
from .uqtri import serre_quotient

__all__ = [
    "TruncatedModule",
    "ModuleVector",
    "TensorSpace",
    "Filtration",
    "BuildError",
    "build_module",
    "submodule_closure",
    "filtration_tests",
]


class BuildError(RuntimeError):
    """Module construction failed (degenerate singular vector, bad depth)."""


def _vadd(vec, other, coeff=None):
    for k, c in other.items():
        if coeff is not None:
            c = coeff * c
        s = vec.get(k, ZERO) + c
        if s.is_zero():
            vec.pop(k, None)
        else:
            vec[k] = s
    return vec


class ModuleVector:
    """Element of a truncated module: weight key -> sparse coefficient dict."""

    def __init__(self, parts=None):
        self.parts = {}
        if parts:
            for beta, vec in parts.items():
                vec = {i: c for i, c in vec.items() if not c.is_zero()}
                if vec:
                    self.parts[tuple(beta)] = vec

    def is_zero(self):
        return not self.parts

    def add(self, other, coeff=None):
        out = {b: dict(v) for b, v in self.parts.items()}
        for b, v in other.parts.items():
            tgt = out.setdefault(b, {})
            _vadd(tgt, v, coeff)
            if not tgt:
                del out[b]
        return ModuleVector(out)

    def scale(self, c):
        if c.is_zero():
            return ModuleVector()
        return ModuleVector({b: {i: c * x for i, x in v.items()}
                             for b, v in self.parts.items()})

    def __eq__(self, other):
        return self.parts == other.parts


class TruncatedModule:
    """Verma module (or generalized parabolic quotient) stored to a depth."""

    def __init__(self, spec, depth, quotient=False, singular_vectors=None):
        self.spec = spec
        self.datum = spec.datum
        self.depth = depth
        self.quotient = quotient
        self.gb = serre_quotient(self.datum.series, self.datum.n, depth)
        self.n = self.datum.n
        self._kernel = {}    # beta -> {pivot plain idx: normalized row dict}
        self._qbasis = {}    # beta -> list of plain indices forming the basis
        self._fmat = {}
        self._emat = {}
        self._eword_memo = {}
        self._hden = []
        for i in range(self.n):
            if self.datum.series == "B" and i == self.n - 1:
                self._hden.append(ONE)
            else:
                half = Fraction(self.datum.norm2(self.datum.alphas[i]), 2)
                self._hden.append(qnum(half))
        if quotient:
            self._build_kernel(singular_vectors or [])
        else:
            for beta in self.gb.weights_up_to(depth):
                self._kernel[beta] = {}
                self._qbasis[beta] = list(range(len(self.gb.basis(beta))))

    # -- weights and bases ------------------------------------------------------

    def weights(self):
        return self.gb.weights_up_to(self.depth)

    def plain_dim(self, beta):
        return len(self.gb.basis(tuple(beta)))

    def dim(self, beta):
        beta = tuple(beta)
        if beta not in self._qbasis:
            return 0
        return len(self._qbasis[beta])

    def eps_of(self, beta):
        return self.datum.eps_of_alpha(beta)

    def module_weight_monomial(self, mu, beta):
        """q^{(mu, lambda - beta)} as a monomial scalar (mu integral)."""
        shift = -2 * self.datum.inner(mu, self.eps_of(beta))
        assert shift.denominator == 1
        return self.spec.q_lambda_power(mu) * monomial(1, int(shift))

    def highest_vector(self):
        zero = (0,) * self.n
        return ModuleVector({zero: {0: ONE}})

    # -- kernel (quotient case) ---------------------------------------------------

    def _build_kernel(self, singular_vectors):
        sing_at = {}
        for beta, plainvec in singular_vectors:
            sing_at.setdefault(tuple(beta), []).append(dict(plainvec))
        for beta in self.gb.weights_up_to(self.depth):
            rows = []
            for i in range(self.n):
                down = tuple(beta[k] - (1 if k == i else 0) for k in range(self.n))
                if any(c < 0 for c in down):
                    continue
                for row in self._kernel.get(down, {}).values():
                    rows.append(self._fmat_plain_apply(i, down, row))
            rows.extend(sing_at.get(beta, []))
            ech = {}
            for row in rows:
                row = dict(row)
                while row:
                    p = max(row)
                    if p not in ech:
                        break
                    _vadd(row, ech[p], -row[p])
                if row:
                    p = max(row)
                    inv = row[p].inv()
                    ech[p] = {k: c * inv for k, c in row.items()}
            self._kernel[beta] = ech
            self._qbasis[beta] = [k for k in range(self.plain_dim(beta))
                                  if k not in ech]

    def reduce_plain(self, beta, vec):
        """Reduce a plain-coordinates vector modulo the kernel at beta."""
        ech = self._kernel[tuple(beta)]
        if not ech:
            return dict(vec)
        vec = dict(vec)
        # kernel rows have their pivot as largest index, so one descending
        # sweep clears every pivot coordinate
        for p in sorted(ech, reverse=True):
            c = vec.get(p)
            if c is not None and not c.is_zero():
                _vadd(vec, ech[p], -c)
        return vec

    def project(self, beta, plainvec):
        """Plain coordinates -> module coordinates (quotient-aware)."""
        beta = tuple(beta)
        red = self.reduce_plain(beta, plainvec) if self.quotient else dict(plainvec)
        pos = {k: t for t, k in enumerate(self._qbasis[beta])}
        out = {}
        for k, c in red.items():
            assert k in pos, "reduction left a kernel pivot"
            out[pos[k]] = c
        return out

    def lift(self, beta, vec):
        basis = self._qbasis[tuple(beta)]
        return {basis[t]: c for t, c in vec.items()}

    # -- plain actions -------------------------------------------------------------

    def _fmat_plain_apply(self, i, beta, vec):
        """f_i on plain coordinates at beta, result plain at beta + alpha_i."""
        target = tuple(beta[k] + (1 if k == i else 0) for k in range(self.n))
        if sum(target) > self.depth:
            raise BuildError("f-action beyond storage depth %d" % self.depth)
        words = self.gb.basis(tuple(beta))
        out = {}
        for k, c in vec.items():
            for t, cc in self.gb.rewrite((i,) + words[k]).items():
                s = out.get(t, ZERO) + c * cc
                if s.is_zero():
                    out.pop(t, None)
                else:
                    out[t] = s
        return out

    def _eword_plain(self, i, word):
        """e_i applied to (word) v_lambda, plain coordinates at wt(word)-alpha_i."""
        key = (i, word)
        if key in self._eword_memo:
            return self._eword_memo[key]
        if not word:
            out = {}
        else:
            j, rest = word[0], word[1:]
            beta_rest = self.gb.weight_of(rest)
            inner = self._eword_plain(i, rest)
            out = {}
            if inner:
                out = self._fmat_plain_apply(
                    j, tuple(b - (1 if k == i else 0)
                             for k, b in enumerate(beta_rest)), inner)
            if i == j:
                hmono = self.module_weight_monomial(self.datum.alphas[i], beta_rest)
                hval = qnum_of_monomial(hmono) / self._hden[i]
                if not hval.is_zero():
                    out = dict(out)
                    _vadd(out, {t: hval * c
                                for t, c in self.gb.rewrite(rest).items()})
        self._eword_memo[key] = out
        return out

    # -- module-coordinate action ----------------------------------------------------

    def f_matrix(self, i, beta):
        key = (i, tuple(beta))
        if key not in self._fmat:
            target = tuple(beta[k] + (1 if k == i else 0) for k in range(self.n))
            cols = {}
            for t, k in enumerate(self._qbasis[tuple(beta)]):
                plain = self._fmat_plain_apply(i, beta, {k: ONE})
                cols[t] = self.project(target, plain)
            self._fmat[key] = cols
        return self._fmat[key]

    def e_matrix(self, i, beta):
        key = (i, tuple(beta))
        if key not in self._emat:
            beta = tuple(beta)
            target = tuple(beta[k] - (1 if k == i else 0) for k in range(self.n))
            cols = {}
            if any(c < 0 for c in target):
                cols = {t: {} for t in range(self.dim(beta))}
            else:
                words = self.gb.basis(beta)
                for t, k in enumerate(self._qbasis[beta]):
                    plain = self._eword_plain(i, words[k])
                    cols[t] = self.project(target, plain)
            self._emat[key] = cols
        return self._emat[key]

    def act(self, gen, vec):
        """Apply a generator to a ModuleVector.

        gen is ("f", i), ("e", i) or ("h", mu) with mu an integral weight;
        the Cartan acts by q^{(mu, weight)}.
        """
        kind = gen[0]
        out = {}
        for beta, v in vec.parts.items():
            if kind == "h":
                c = self.module_weight_monomial(gen[1], beta)
                tgt = out.setdefault(beta, {})
                _vadd(tgt, {t: c * x for t, x in v.items()})
                continue
            i = gen[1]
            if kind == "f":
                target = tuple(beta[k] + (1 if k == i else 0) for k in range(self.n))
                mat = self.f_matrix(i, beta)
            else:
                target = tuple(beta[k] - (1 if k == i else 0) for k in range(self.n))
                if any(c < 0 for c in target):
                    continue
                mat = self.e_matrix(i, beta)
            tgt = out.setdefault(target, {})
            for t, c in v.items():
                _vadd(tgt, mat[t], c)
        return ModuleVector(out)

    def apply_lowering_element(self, elem, vec):
        """Left-multiply by a homogeneous lowering element (uqtri.Element)."""
        out = {}
        for beta, v in vec.parts.items():
            target = tuple(b + w for b, w in zip(beta, elem.weight))
            if sum(target) > self.depth:
                raise BuildError("element action beyond storage depth")
            words = self.gb.basis(tuple(beta))
            qb = self._qbasis[tuple(beta)]
            plain = {}
            for t, c in v.items():
                u = words[qb[t]]
                for ew, ec in elem.coeffs.items():
                    for k, cc in self.gb.rewrite(ew + u).items():
                        s = plain.get(k, ZERO) + c * ec * cc
                        if s.is_zero():
                            plain.pop(k, None)
                        else:
                            plain[k] = s
            tgt = out.setdefault(target, {})
            _vadd(tgt, self.project(target, plain))
        return ModuleVector(out)

    def apply_raising_word(self, word, vec):
        """Apply the raising word e_{l1}..e_{lt} (rightmost letter first)."""
        for i in reversed(word):
            vec = self.act(("e", i), vec)
            if vec.is_zero():
                break
        return vec

    def singular_residues(self, vec):
        """e_i-images of a vector; all zero iff the vector is singular."""
        return [self.act(("e", i), vec) for i in range(self.n)]


def build_module(spec, depth, quotient=False):
    """Build M_lambda (or M^k_lambda when quotient=True) to the given depth.

    Singular vectors for the quotient come from the reduced Shapovalov
    entries and are re-verified here by exact raising-action checks.
    """
    if not quotient:
        return TruncatedModule(spec, depth)
    from . import shapovalov

    datum = spec.datum
    plain = TruncatedModule(spec, depth)
    sing = []
    for alpha in spec.pi_k:
        pairs = datum.pairs_of(alpha)
        i, j = pairs[0]
        elem = shapovalov.fcheck_element(spec, i, j, plain.gb)
        vec = {}
        if not elem.is_zero():
            basis = plain.gb.basis(elem.weight)
            index = {w: k for k, w in enumerate(basis)}
            vec = {index[w]: c for w, c in elem.coeffs.items()}
        if not vec:
            vec = _singular_nullspace(plain, alpha)
            if not vec:
                raise BuildError(
                    "degenerate singular vector at root %s" % (alpha,))
        else:
            vec = _content_normalize(vec)
        beta = tuple(int(c) for c in datum.alpha_coords(alpha))
        mv = ModuleVector({beta: vec})
        for r in plain.singular_residues(mv):
            if not r.is_zero():
                raise BuildError(
                    "constructed vector at root %s is not singular" % (alpha,))
        sing.append((beta, vec))
    return TruncatedModule(spec, depth, quotient=True, singular_vectors=sing)


def _content_normalize(vec):
    """Divide by the first coefficient (singular vectors are projective)."""
    first = vec[min(vec)]
    inv = first.inv()
    return {k: c * inv for k, c in vec.items()}


def _singular_nullspace(module, alpha):
    """Directly solve for a singular vector of weight lambda - alpha."""
    datum = module.datum
    beta = tuple(int(c) for c in datum.alpha_coords(alpha))
    dim = module.plain_dim(beta)
    rows = []
    for i in range(module.n):
        target = tuple(beta[k] - (1 if k == i else 0) for k in range(module.n))
        if any(c < 0 for c in target):
            continue
        words = module.gb.basis(beta)
        for t in range(module.plain_dim(target)):
            row = {}
            for k in range(dim):
                img = module._eword_plain(i, words[k])
                c = img.get(t)
                if c is not None and not c.is_zero():
                    row[k] = c
            if row:
                rows.append(row)
    ns = _nullspace(rows, dim)
    if len(ns) != 1:
        return {}
    return _content_normalize(ns[0])


def _nullspace(rows, dim):
    ech = {}
    for row in rows:
        row = dict(row)
        while row:
            p = max(row)
            if p not in ech:
                break
            _vadd(row, ech[p], -row[p])
        if row:
            p = max(row)
            inv = row[p].inv()
            ech[p] = {k: c * inv for k, c in row.items()}
    out = []
    free = [k for k in range(dim) if k not in ech]
    for fv in free:
        sol = {fv: ONE}
        # row tails only involve indices below the pivot, so ascending
        # pivots see fully determined coordinates
        for p in sorted(ech):
            val = ZERO
            for k, c in ech[p].items():
                if k != p and k in sol:
                    val = val - c * sol[k]
            if not val.is_zero():
                sol[p] = val
        out.append(sol)
    return out


# ---------------------------------------------------------------------------
# the tensor space C^N (x) M
# ---------------------------------------------------------------------------

class TensorSpace:
    """Weight-graded model of C^N tensor M, keyed from the top weight.

    Tensor weights are indexed by gamma in the positive root lattice with
    mu = lambda + eps_1 - gamma; the component of w_i sits at module weight
    lambda - (gamma - shift_i) with shift_i = eps_1 - eps_i.
    """

    def __init__(self, module, depth):
        if depth > module.depth:
            raise BuildError("tensor depth %d exceeds module storage %d"
                             % (depth, module.depth))
        self.module = module
        self.datum = module.datum
        self.spec = module.spec
        self.depth = depth
        self.n = self.datum.n
        N = self.datum.N
        self.shifts = []
        for i in range(N):
            d = tuple(a - b for a, b in
                      zip(self.datum.weights[0], self.datum.weights[i]))
            co = self.datum.alpha_coords(d)
            assert all(c.denominator == 1 for c in co)
            self.shifts.append(tuple(int(c) for c in co))
        self._comp = {}
        self._offsets = {}

    def weights(self):
        gb = self.module.gb
        out = []
        for h in range(self.depth + 1):
            for gamma in gb._weights_at(h):
                if self.components(gamma):
                    out.append(gamma)
        return out

    def components(self, gamma):
        gamma = tuple(gamma)
        if gamma not in self._comp:
            comps = []
            offsets = []
            total = 0
            for i in range(self.datum.N):
                beta = tuple(g - s for g, s in zip(gamma, self.shifts[i]))
                if any(c < 0 for c in beta) or sum(beta) > self.module.depth:
                    continue
                d = self.module.dim(beta)
                if d == 0:
                    continue
                comps.append((i, beta, d))
                offsets.append(total)
                total += d
            self._comp[gamma] = comps
            self._offsets[gamma] = (offsets, total)
        return self._comp[gamma]

    def dim(self, gamma):
        self.components(gamma)
        return self._offsets[tuple(gamma)][1]

    def flat(self, gamma, i, t):
        comps = self.components(gamma)
        offsets, _ = self._offsets[tuple(gamma)]
        for (ci, _, d), off in zip(comps, offsets):
            if ci == i:
                return off + t
        raise KeyError("component %d not present at %s" % (i, gamma))

    def unflat(self, gamma, k):
        comps = self.components(gamma)
        offsets, _ = self._offsets[tuple(gamma)]
        for (ci, beta, d), off in zip(comps, offsets):
            if off <= k < off + d:
                return ci, beta, k - off
        raise KeyError(k)

    def seed(self, j):
        """w_j tensor v_lambda as (gamma, vector)."""
        gamma = self.shifts[j]
        return gamma, {self.flat(gamma, j, 0): ONE}

    # -- coproduct actions -------------------------------------------------------

    def apply_f(self, i, gamma, vec):
        gamma = tuple(gamma)
        target = tuple(g + (1 if k == i else 0) for k, g in enumerate(gamma))
        if sum(target) > self.depth:
            raise BuildError("tensor f-action beyond depth")
        mod, nat = self.module, self.datum.natural
        out = {}
        for k, c in vec.items():
            l, beta, t = self.unflat(gamma, k)
            r = nat.apply_f(i, l)
            if r is not None:
                coeff = c * mod.module_weight_monomial(
                    tuple(-a for a in self.datum.alphas[i]), beta)
                kk = self.flat(target, r, t)
                s = out.get(kk, ZERO) + coeff
                if s.is_zero():
                    out.pop(kk, None)
                else:
                    out[kk] = s
            img = mod.f_matrix(i, beta)[t]
            for t2, cc in img.items():
                kk = self.flat(target, l, t2)
                s = out.get(kk, ZERO) + c * cc
                if s.is_zero():
                    out.pop(kk, None)
                else:
                    out[kk] = s
        return target, out

    def apply_e(self, i, gamma, vec):
        gamma = tuple(gamma)
        target = tuple(g - (1 if k == i else 0) for k, g in enumerate(gamma))
        mod, nat = self.module, self.datum.natural
        out = {}
        if any(c < 0 for c in target):
            return target, out
        for k, c in vec.items():
            l, beta, t = self.unflat(gamma, k)
            r = nat.apply_e(i, l)
            if r is not None:
                kk = self.flat(target, r, t)
                s = out.get(kk, ZERO) + c
                if s.is_zero():
                    out.pop(kk, None)
                else:
                    out[kk] = s
            expo = self.datum.inner(self.datum.alphas[i], self.datum.weights[l])
            coeff = c * monomial(1, 2 * int(expo))
            for t2, cc in mod.e_matrix(i, beta)[t].items():
                kk = self.flat(target, l, t2)
                s = out.get(kk, ZERO) + coeff * cc
                if s.is_zero():
                    out.pop(kk, None)
                else:
                    out[kk] = s
        return target, out

    def cartan_monomial(self, mu, gamma, i, beta):
        del gamma
        return self.module.module_weight_monomial(mu, beta) * monomial(
            1, 2 * int(self.datum.inner(mu, self.datum.weights[i])))


# ---------------------------------------------------------------------------
# submodule closures and the standard filtration
# ---------------------------------------------------------------------------

def _rref_insert(ech, row):
    row = dict(row)
    while row:
        p = min(row)
        if p not in ech:
            inv = row[p].inv()
            ech[p] = {k: c * inv for k, c in row.items()}
            return True
        _vadd(row, ech[p], -row[p])
    return False


def _rref_reduce(ech, vec):
    vec = dict(vec)
    while vec:
        p = min(vec)
        if p not in ech:
            return vec
        _vadd(vec, ech[p], -vec[p])
    return vec


def submodule_closure(space, seeds, depth=None, max_passes=6):
    """Span of the submodule generated by the seed vectors, per weight.

    seeds: list of (gamma, vector).  Returns dict gamma -> echelon rows.
    The closure iterates lowering and raising passes until the ranks
    stabilize (one lowering pass suffices for highest-weight seeds; the
    loop is the general contract).
    """
    depth = space.depth if depth is None else depth
    spans = {}
    for gamma, vec in seeds:
        ech = spans.setdefault(tuple(gamma), {})
        _rref_insert(ech, vec)
    weights = [g for g in space.weights() if sum(g) <= depth]
    for _ in range(max_passes):
        changed = False
        for gamma in weights:
            acc = spans.get(gamma, {})
            for i in range(space.n):
                src = tuple(g - (1 if k == i else 0) for k, g in enumerate(gamma))
                if any(c < 0 for c in src) or src not in spans:
                    continue
                for row in list(spans[src].values()):
                    _, img = space.apply_f(i, src, row)
                    if img and _rref_insert(acc, img):
                        changed = True
            if acc:
                spans[gamma] = acc
        for gamma in reversed(weights):
            if gamma not in spans:
                continue
            for i in range(space.n):
                tgt = tuple(g - (1 if k == i else 0) for k, g in enumerate(gamma))
                if any(c < 0 for c in tgt):
                    continue
                for row in list(spans[gamma].values()):
                    _, img = space.apply_e(i, gamma, row)
                    if img:
                        acc = spans.setdefault(tgt, {})
                        if _rref_insert(acc, img):
                            changed = True
        if not changed:
            break
    return spans


class Filtration:
    """The chain V_1 <= .. <= V_N generated by w_1 v, .., w_j v per weight."""

    def __init__(self, space, depth=None):
        self.space = space
        self.depth = space.depth if depth is None else depth
        self._piece = {}
        self._vj = {}

    def _w_piece(self, j):
        if j not in self._piece:
            self._piece[j] = submodule_closure(
                self.space, [self.space.seed(j)], self.depth, max_passes=1)
        return self._piece[j]

    def vj(self, j):
        """Spans of V_j per weight (j = 0 gives the zero filtration step)."""
        if j in self._vj:
            return self._vj[j]
        if j == 0:
            out = {}
        else:
            prev = self.vj(j - 1)
            out = {g: {p: dict(r) for p, r in e.items()} for g, e in prev.items()}
            for gamma, ech in self._w_piece(j - 1).items():
                acc = out.setdefault(gamma, {})
                for row in ech.values():
                    _rref_insert(acc, row)
        self._vj[j] = out
        return out

    def contains(self, j, gamma, vec):
        ech = self.vj(j).get(tuple(gamma), {})
        return not _rref_reduce(ech, vec)

    def graded_dim(self, j, gamma):
        gamma = tuple(gamma)
        return (len(self.vj(j).get(gamma, {}))
                - len(self.vj(j - 1).get(gamma, {})))

    def principal_scalar(self, i, j):
        """Solve w_i psi^{ij} v = c * w_j v mod V_{j-1} for the scalar c.

        Indices are 0-based, so the previous filtration step is the span of
        the seeds w_0 .. w_{j-1}, which is self.vj(j).  Returns (c, True)
        when the scalar exists and is unique, else (None, False).
        """
        space = self.space
        word = space.datum.poset.psi[(i, j)]
        vec = _psi_tensor_vector(space, i, word)
        gamma, seedvec = space.seed(j)
        prev = self.vj(j).get(tuple(gamma), {})
        r_vec = _rref_reduce(prev, vec)
        r_seed = _rref_reduce(prev, seedvec)
        if not r_seed:
            return None, False
        keys = set(r_vec) | set(r_seed)
        c = None
        for k in sorted(keys):
            a = r_vec.get(k, ZERO)
            b = r_seed.get(k, ZERO)
            if b.is_zero():
                if not a.is_zero():
                    return None, False
                continue
            ratio = a / b
            if c is None:
                c = ratio
            elif c != ratio:
                return None, False
        return (c if c is not None else ZERO), True


def _psi_tensor_vector(space, i, word):
    """w_i tensor (psi v_lambda) at the tensor weight of w_i psi."""
    mod = space.module
    vec = mod.highest_vector()
    for letter in reversed(word):
        vec = mod.act(("f", letter), vec)
    if vec.is_zero():
        return {}
    (beta, coeffs), = vec.parts.items()
    gamma = tuple(s + b for s, b in zip(space.shifts[i], beta))
    return {space.flat(gamma, i, t): c for t, c in coeffs.items()}


def filtration_tests(space, depth=None, sample_nonprincipal=True):
    """Membership and principal-scalar checks for the standard filtration.

    Returns a list of record dicts (name, status, witness) covering:
    non-principal monomial membership, principal-diagonal scalars, and for
    quotient modules the collapse at indices outside I_k.  With 0-based
    indices, "V_{j-1}" of the statements is the span of the seeds before
    seed j, i.e. filt.vj(j).
    """
    from .rootdatum import canonical_word

    datum = space.datum
    spec = space.spec
    filt = Filtration(space, depth)
    depth = filt.depth
    records = []

    pairs = [] if space.module.quotient else datum.poset.strict_pairs()
    for (i, j) in pairs:
        if sum(space.shifts[j]) > depth:
            continue
        c, ok = filt.principal_scalar(i, j)
        status = "pass" if (ok and c is not None and not c.is_zero()
                            and c.is_monomial()) else "fail"
        records.append({
            "name": "filtration.principal.%d.%d" % (i + 1, j + 1),
            "status": status,
            "witness": str(c),
            "flag": "scalar recorded; printed closed form and sign not asserted",
        })
        if not sample_nonprincipal:
            continue
        beta = space.module.gb.weight_of(datum.poset.psi[(i, j)])
        canon = canonical_word(datum, datum.poset.psi[(i, j)])
        gamma = tuple(s + b for s, b in zip(space.shifts[i], beta))
        for word in space.module.gb.words(beta):
            if canonical_word(datum, word) == canon:
                continue
            vec = _word_tensor_vector(space, i, word)
            ok = filt.contains(j, gamma, vec)
            records.append({
                "name": "filtration.nonprincipal.%d.%d.%s" % (
                    i + 1, j + 1, "".join(str(l + 1) for l in word)),
                "status": "pass" if ok else "fail",
            })

    if space.module.quotient:
        for j in spec.bar_i_k():
            if sum(space.shifts[j]) > depth:
                continue
            gamma, vec = space.seed(j)
            ok = filt.contains(j, gamma, vec)
            records.append({
                "name": "filtration.collapse.%d" % (j + 1),
                "status": "pass" if ok else "fail",
            })
    return records


def _word_tensor_vector(space, i, word):
    return _psi_tensor_vector(space, i, word)


def verma_graded_dims_check(space, depth=None):
    """gr V_j vs Verma dimensions at lambda + eps_j (plain module only)."""
    from .rootdatum import kostant_partitions

    datum = space.datum
    filt = Filtration(space, depth)
    depth = filt.depth
    records = []
    for j in range(datum.N):
        gamma_j = space.shifts[j]
        for gamma in space.weights():
            if sum(gamma) > depth - 1 or any(
                    g < s for g, s in zip(gamma, gamma_j)):
                continue
            beta = tuple(g - s for g, s in zip(gamma, gamma_j))
            expect = kostant_partitions(datum, beta)
            got = filt.graded_dim(j + 1, gamma)
            records.append({
                "name": "filtration.grdim.%d.%s" % (j + 1, gamma),
                "status": "pass" if got == expect else "fail",
                "witness": "%d vs %d" % (got, expect),
            })
    return records
