"""Exact coefficient arithmetic: rational functions in one variable v.

All quantum-group scalars in this kernel live in Q(i)(v) with q = v**2:
integer powers of v absorb the half-integer q-exponents of type B, and the
Gaussian unit i realizes torus square roots sitting over -1 (pseudo-Levi
blocks), which plain rationals cannot.  Generic and Levi weight data stay
inside Q(v); the imaginary part only enters through torus constants.

Polynomial coefficients are Gaussian integers stored as int pairs (a, b)
for a + b*i.  Values are immutable and every operation is exact; there is
no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd

__all__ = [
    "Scalar",
    "GaussRat",
    "PoleError",
    "ExponentError",
    "ZERO",
    "ONE",
    "qnum",
    "qnum_base",
    "qnum_of_monomial",
    "qbinomial_base",
    "vpower",
    "monomial",
    "from_fraction",
    "from_gauss",
    "lambda_power",
    "parse_scalar",
    "parse_gauss",
]


class PoleError(ZeroDivisionError):
    """Evaluation or inversion hit a vanishing denominator."""


class ExponentError(ValueError):
    """A pairing produced a non-integral v-exponent (internal consistency bug)."""


# ---------------------------------------------------------------------------
# Gaussian integers as int pairs (a, b) = a + b*i
# ---------------------------------------------------------------------------

def _cadd(x, y):
    return (x[0] + y[0], x[1] + y[1])


def _csub(x, y):
    return (x[0] - y[0], x[1] - y[1])


def _cneg(x):
    return (-x[0], -x[1])


def _cmul(x, y):
    a, b = x
    c, d = y
    if b == 0:
        if d == 0:
            return (a * c, 0)
        return (a * c, a * d)
    if d == 0:
        return (a * c, b * c)
    return (a * c - b * d, a * d + b * c)


def _cnorm(x):
    return x[0] * x[0] + x[1] * x[1]


def _cdiv_exact(x, y):
    """x / y assuming y divides x in Z[i]."""
    n = _cnorm(y)
    re = x[0] * y[0] + x[1] * y[1]
    im = x[1] * y[0] - x[0] * y[1]
    assert re % n == 0 and im % n == 0, "inexact Gaussian division"
    return (re // n, im // n)


def _rounddiv(a, b):
    q, r = divmod(a, b)
    if 2 * r >= b:
        q += 1
    return q


def _cgcd(x, y):
    """Gaussian gcd, normalized to the canonical associate."""
    while y != (0, 0):
        n = _cnorm(y)
        re = x[0] * y[0] + x[1] * y[1]
        im = x[1] * y[0] - x[0] * y[1]
        q = (_rounddiv(re, n), _rounddiv(im, n))
        x, y = y, _csub(x, _cmul(q, y))
    return _canonical_unit_rep(x)


def _canonical_unit_rep(x):
    """The associate of x with positive real part and nonnegative imaginary
    part (first quadrant including the positive real axis)."""
    if x == (0, 0):
        return x
    for _ in range(4):
        if x[0] > 0 and x[1] >= 0:
            return x
        x = (-x[1], x[0])
    raise AssertionError("unit normalization failed")


def _unit_to_canonical(x):
    """The unit u with u*x canonical."""
    u = (1, 0)
    for _ in range(4):
        if x[0] > 0 and x[1] >= 0:
            return u
        x = (-x[1], x[0])
        u = _cmul(u, (0, 1))
    raise AssertionError("unit normalization failed")


class GaussRat:
    """A Gaussian rational a + b*i with exact Fraction components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def i():
        return GaussRat(0, 1)

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def is_rational(self):
        return self.im == 0

    def __add__(self, other):
        other = _as_gauss(other)
        return GaussRat(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        other = _as_gauss(other)
        return GaussRat(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __mul__(self, other):
        other = _as_gauss(other)
        return GaussRat(self.re * other.re - self.im * other.im,
                        self.re * other.im + self.im * other.re)

    def __truediv__(self, other):
        other = _as_gauss(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise PoleError("division by zero")
        return GaussRat((self.re * other.re + self.im * other.im) / n,
                        (self.im * other.re - self.re * other.im) / n)

    def inv(self):
        return GaussRat(1) / self

    def __pow__(self, k):
        k = int(k)
        out = GaussRat(1)
        base = self if k >= 0 else self.inv()
        for _ in range(abs(k)):
            out = out * base
        return out

    def __eq__(self, other):
        try:
            other = _as_gauss(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        imtxt = "i" if abs(self.im) == 1 else "%s*i" % abs(self.im)
        sign = "-" if self.im < 0 else "+"
        if self.re == 0:
            return ("-" if self.im < 0 else "") + imtxt
        return "%s%s%s" % (self.re, sign, imtxt)

    def __repr__(self):
        return "GaussRat(%s)" % self


def _as_gauss(x):
    if isinstance(x, GaussRat):
        return x
    return GaussRat(Fraction(x))


def parse_gauss(text):
    """Parse 'p/q', 'i', '-i', 'p/q*i' or 'a+b*i' into a GaussRat."""
    text = text.strip().replace(" ", "")
    if "i" not in text:
        return GaussRat(Fraction(text))
    body = text
    # split a+b*i / a-b*i on the last +/- that is not a leading sign
    for pos in range(len(body) - 1, 0, -1):
        if body[pos] in "+-" and body[pos - 1] not in "+-*/":
            re_part, im_part = body[:pos], body[pos:]
            break
    else:
        re_part, im_part = "0", body
    im_part = im_part.replace("*i", "").replace("i", "")
    if im_part in ("", "+"):
        im = Fraction(1)
    elif im_part == "-":
        im = Fraction(-1)
    else:
        im = Fraction(im_part)
    return GaussRat(Fraction(re_part), im)


# ---------------------------------------------------------------------------
# sparse polynomials in v over Z[i]: dict exponent -> (a, b)
# ---------------------------------------------------------------------------

def _padd(a, b):
    out = dict(a)
    for e, c in b.items():
        s = _cadd(out.get(e, (0, 0)), c)
        if s == (0, 0):
            out.pop(e, None)
        else:
            out[e] = s
    return out


def _pneg(a):
    return {e: _cneg(c) for e, c in a.items()}


def _pmul(a, b):
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            s = _cadd(out.get(e, (0, 0)), _cmul(c1, c2))
            if s == (0, 0):
                out.pop(e, None)
            else:
                out[e] = s
    return out


def _pscale(a, k):
    if k == (0, 0):
        return {}
    return {e: _cmul(c, k) for e, c in a.items()}


def _content(a):
    g = (0, 0)
    for c in a.values():
        g = _cgcd(g, c)
        if g == (1, 0):
            return g
    return g


def _to_dense(a):
    d = max(a)
    out = [(0, 0)] * (d + 1)
    for e, c in a.items():
        out[e] = c
    return out


def _from_dense(lst):
    return {e: c for e, c in enumerate(lst) if c != (0, 0)}


def _dense_prim(a):
    g = (0, 0)
    for c in a:
        g = _cgcd(g, c)
    if g not in ((0, 0), (1, 0)):
        a = [_cdiv_exact(c, g) for c in a]
    return a


def _dense_rem(a, b):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and any(c != (0, 0) for c in a):
        while a and a[-1] == (0, 0):
            a.pop()
        if len(a) - 1 < db:
            break
        la = a[-1]
        g = _cgcd(la, lb)
        m_b, m_a = _cdiv_exact(la, g), _cdiv_exact(lb, g)
        shift = len(a) - 1 - db
        a = [_cmul(m_a, c) for c in a]
        for k, c in enumerate(b):
            a[shift + k] = _csub(a[shift + k], _cmul(m_b, c))
        while a and a[-1] == (0, 0):
            a.pop()
        if a:
            a = _dense_prim(a)
    return a


def _pgcd(a, b):
    """Primitive gcd in Z[i][v] (contents discarded, canonical unit)."""
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    sa, sb = min(a), min(b)
    s = min(sa, sb)
    da = _to_dense({e - sa: c for e, c in a.items()})
    db = _to_dense({e - sb: c for e, c in b.items()})
    da, db = _dense_prim(da), _dense_prim(db)
    while db and any(c != (0, 0) for c in db):
        da, db = db, _dense_rem(da, db)
    da = _dense_prim(da)
    u = _unit_to_canonical(da[-1])
    if u != (1, 0):
        da = [_cmul(u, c) for c in da]
    g = _from_dense(da)
    return {e + s: c for e, c in g.items()}


def _pdiv_exact(a, b):
    """Exact division a / b of Z[i] polynomials (b divides a)."""
    if not a:
        return {}
    sa, sb = min(a), min(b)
    da = {e - sa: c for e, c in a.items()}
    db = _to_dense({e - sb: c for e, c in b.items()})
    lb = db[-1]
    nb = _cnorm(lb)
    out = {}
    num = {e: (Fraction(c[0]), Fraction(c[1])) for e, c in da.items()}
    deg_b = len(db) - 1
    while num:
        deg_a = max(num)
        if deg_a < deg_b:
            break
        la = num[deg_a]
        # la / lb over Q(i)
        re = (la[0] * lb[0] + la[1] * lb[1]) / nb
        im = (la[1] * lb[0] - la[0] * lb[1]) / nb
        e = deg_a - deg_b
        out[e] = (re, im)
        for k, c in enumerate(db):
            if c == (0, 0):
                continue
            cur = num.get(e + k, (Fraction(0), Fraction(0)))
            cur = (cur[0] - (re * c[0] - im * c[1]),
                   cur[1] - (re * c[1] + im * c[0]))
            if cur == (0, 0):
                num.pop(e + k, None)
            else:
                num[e + k] = cur
    assert not num, "inexact polynomial division"
    res = {}
    for e, (re, im) in out.items():
        assert re.denominator == 1 and im.denominator == 1, "non-integral quotient"
        if (re, im) != (0, 0):
            res[e + sa - sb] = (int(re), int(im))
    return res


def _coef_str(c, lead=False):
    a, b = c
    if b == 0:
        return ("%d" % a) if not lead else ("%d" % a)
    if a == 0:
        if b == 1:
            return "i"
        if b == -1:
            return "-i"
        return "%d*i" % b
    return "(%d%s%s)" % (a, "+" if b > 0 else "-",
                         "i" if abs(b) == 1 else "%d*i" % abs(b))


def _pstr(p):
    if not p:
        return "0"
    parts = []
    for e in sorted(p, reverse=True):
        a, b = p[e]
        neg = b == 0 and a < 0
        c = (-a, -b) if neg else (a, b)
        if c == (1, 0) and e != 0:
            term = ""
        else:
            term = _coef_str(c)
        if e != 0:
            if term:
                term += "*"
            term += "v" if e == 1 else "v^%d" % e
        parts.append(("- " if neg else "+ ") + term)
    s = " ".join(parts)
    return ("-" + s[2:]) if s.startswith("- ") else s[2:]


# ---------------------------------------------------------------------------
# Scalar: reduced fraction of Z[i]-coefficient polynomials in v
# ---------------------------------------------------------------------------

class Scalar:
    """An element of Q(i)(v), kept in a canonical reduced form.

    Canonical form: numerator and denominator have Gaussian-integer
    coefficients, no common polynomial factor, jointly reduced contents,
    nonnegative exponents with at least one constant term present, and the
    leading denominator coefficient is the canonical associate (positive
    real part, nonnegative imaginary part).
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den, _normalized=False):
        if _normalized:
            self.num, self.den = num, den
        else:
            self.num, self.den = _normalize(num, den)
        self._hash = None

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == {0: (1, 0)} and self.den == {0: (1, 0)}

    def is_monomial(self):
        """True if a Gaussian-rational multiple of one power of v (nonzero)."""
        return len(self.num) == 1 and len(self.den) == 1

    def as_rational(self):
        """Return self as a Fraction if a rational constant, else None."""
        g = self.as_gauss()
        if g is not None and g.im == 0:
            return g.re
        return None

    def as_gauss(self):
        """Return self as a GaussRat if constant, else None."""
        if not self.num:
            return GaussRat(0)
        if set(self.num) <= {0} and set(self.den) <= {0}:
            num = GaussRat(self.num[0][0], self.num[0][1])
            den = GaussRat(self.den[0][0], self.den[0][1])
            return num / den
        return None

    # -- field operations ------------------------------------------------------

    def __add__(self, other):
        if self.den == other.den:
            return Scalar(_padd(self.num, other.num), dict(self.den))
        return Scalar(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    def __sub__(self, other):
        if self.den == other.den:
            return Scalar(_padd(self.num, _pneg(other.num)), dict(self.den))
        return Scalar(
            _padd(_pmul(self.num, other.den), _pneg(_pmul(other.num, self.den))),
            _pmul(self.den, other.den),
        )

    def __neg__(self):
        return Scalar(_pneg(self.num), dict(self.den), _normalized=True)

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return ZERO
        return Scalar(_pmul(self.num, other.num), _pmul(self.den, other.den))

    def __truediv__(self, other):
        if other.is_zero():
            raise PoleError("division by zero scalar")
        if self.is_zero():
            return ZERO
        return Scalar(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def inv(self):
        if self.is_zero():
            raise PoleError("inverse of zero")
        return Scalar(dict(self.den), dict(self.num))

    def __pow__(self, k):
        if k == 0:
            return ONE
        base = self if k > 0 else self.inv()
        out = base
        for _ in range(abs(k) - 1):
            out = out * base
        return out

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(
                (tuple(sorted(self.num.items())), tuple(sorted(self.den.items())))
            )
        return self._hash

    # -- evaluation and printing ------------------------------------------------

    def evaluate_at(self, v0):
        """Exact value at v = v0 (rational); raises PoleError on a pole."""
        v0 = Fraction(v0)

        def ev(p):
            re = sum(Fraction(c[0]) * v0 ** e for e, c in p.items())
            im = sum(Fraction(c[1]) * v0 ** e for e, c in p.items())
            return GaussRat(re, im)

        den = ev(self.den)
        if den.is_zero():
            raise PoleError("pole at v = %s" % v0)
        return ev(self.num) / den

    def __str__(self):
        if self.den == {0: (1, 0)}:
            return _pstr(self.num)
        num = _pstr(self.num)
        den = _pstr(self.den)
        if len(self.num) > 1:
            num = "(" + num + ")"
        if len(self.den) > 1 or "*" in den or "i" in den:
            den = "(" + den + ")"
        return num + "/" + den

    def __repr__(self):
        return "Scalar(%s)" % self


def _normalize(num, den):
    if not den:
        raise PoleError("zero denominator")
    if not num:
        return {}, {0: (1, 0)}
    shift = min(min(num), min(den), 0)
    if shift:
        num = {e - shift: c for e, c in num.items()}
        den = {e - shift: c for e, c in den.items()}
    s = min(min(num), min(den))
    if s:
        num = {e - s: c for e, c in num.items()}
        den = {e - s: c for e, c in den.items()}
    g = _pgcd(num, den)
    if len(g) > 1 or (g and max(g) > 0):
        num = _pdiv_exact(num, g)
        den = _pdiv_exact(den, g)
    cn, cd = _content(num), _content(den)
    k = _cgcd(cn, cd)
    if k not in ((0, 0), (1, 0)):
        num = {e: _cdiv_exact(c, k) for e, c in num.items()}
        den = {e: _cdiv_exact(c, k) for e, c in den.items()}
    u = _unit_to_canonical(den[max(den)])
    if u != (1, 0):
        num = _pscale(num, u)
        den = _pscale(den, u)
    return num, den


ZERO = Scalar({}, {0: (1, 0)}, _normalized=True)
ONE = Scalar({0: (1, 0)}, {0: (1, 0)}, _normalized=True)


def from_fraction(x):
    x = Fraction(x)
    return Scalar({0: (x.numerator, 0)} if x else {}, {0: (x.denominator, 0)})


def from_gauss(g):
    g = _as_gauss(g)
    den = (g.re.denominator * g.im.denominator) // _igcd(
        g.re.denominator, g.im.denominator)
    a = int(g.re * den)
    b = int(g.im * den)
    if (a, b) == (0, 0):
        return ZERO
    return Scalar({0: (a, b)}, {0: (den, 0)})


def vpower(e):
    """v**e for an integer e (negative exponents allowed)."""
    if e >= 0:
        return Scalar({e: (1, 0)}, {0: (1, 0)}, _normalized=True)
    return Scalar({0: (1, 0)}, {-e: (1, 0)}, _normalized=True)


def monomial(coef, e):
    """coef * v**e with coef rational or GaussRat, e integer."""
    return from_gauss(coef) * vpower(e)


def qnum(z):
    """The symmetric q-number [z]_q = (q^z - q^-z)/(q - q^-1) with q = v^2.

    z may be a half-integer; 2z must be integral.
    """
    z = Fraction(z)
    if (2 * z).denominator != 1:
        raise ExponentError("qnum argument must be a half-integer: %s" % z)
    return qnum_base(z, 2)


def qnum_base(z, a):
    """[z] in base v^a: (v^{az} - v^{-az})/(v^a - v^{-a})."""
    az = Fraction(z) * a
    if az.denominator != 1:
        raise ExponentError("non-integral exponent in qnum_base")
    az = int(az)
    if az == 0:
        return ZERO
    sign = 1 if az > 0 else -1
    az = abs(az)
    out = Scalar({2 * az: (1, 0), 0: (-1, 0)}, {az + a: (1, 0), az - a: (-1, 0)})
    return out if sign > 0 else -out


def qnum_of_monomial(m):
    """[x]_q where q^x is the (monomial) scalar m: (m - m^-1)/(q - q^-1)."""
    return (m - m.inv()) / _Q_MINUS_QINV


_Q_MINUS_QINV = vpower(2) - vpower(-2)


def qfactorial_base(k, a):
    out = ONE
    for t in range(2, k + 1):
        out = out * qnum_base(t, a)
    return out


def qbinomial_base(m, k, a):
    """Symmetric q-binomial [m choose k] in base v^a."""
    num = ONE
    for t in range(m - k + 1, m + 1):
        num = num * qnum_base(t, a)
    return num / qfactorial_base(k, a)


# ---------------------------------------------------------------------------
# torus monomials
# ---------------------------------------------------------------------------

def lambda_power(mu, spec):
    """q^{(lambda, mu)} for a weight mu with integer eps-coordinates.

    lambda = lambda0/hbar + lambda1 is carried by `spec` (anything with
    attributes ``s`` and ``lambda1``): the hbar-part contributes the torus
    monomial prod s_i^{mu_i}, the finite part contributes v^{2(lambda1, mu)}.
    """
    coef = GaussRat(1)
    exp2 = Fraction(0)
    for k, m in enumerate(mu):
        if m == 0:
            continue
        mi = Fraction(m)
        if mi.denominator != 1:
            raise ExponentError("non-integral eps-coordinate in lambda_power: %s" % (mu,))
        coef = coef * (_as_gauss(spec.s[k]) ** int(mi))
        exp2 += 2 * Fraction(spec.lambda1[k]) * mi
    if exp2.denominator != 1:
        raise ExponentError("non-integral v-exponent in lambda_power: %s" % exp2)
    return monomial(coef, int(exp2))


# ---------------------------------------------------------------------------
# parsing of the printed format
# ---------------------------------------------------------------------------

def _parse_coef(txt):
    txt = txt.strip()
    if txt in ("", "+"):
        return (1, 0)
    if txt == "-":
        return (-1, 0)
    g = parse_gauss(txt)
    assert g.re.denominator == 1 and g.im.denominator == 1
    return (int(g.re), int(g.im))


def _parse_poly(text):
    text = text.strip()
    if text.startswith("(") and text.endswith(")") and _balanced(text[1:-1]):
        text = text[1:-1]
    out = {}
    for sign, term in _split_terms(text):
        term = term.strip()
        if "v" in term:
            coeftxt, _, exptxt = term.partition("v")
            coeftxt = coeftxt.rstrip("*")
            if coeftxt.startswith("(") and coeftxt.endswith(")"):
                coeftxt = coeftxt[1:-1]
            c = _parse_coef(coeftxt)
            e = int(exptxt[1:]) if exptxt.startswith("^") else (0 if not exptxt else int(exptxt))
            if not exptxt:
                e = 1
        else:
            c = _parse_coef(term)
            e = 0
        if sign < 0:
            c = _cneg(c)
        cur = _cadd(out.get(e, (0, 0)), c)
        if cur == (0, 0):
            out.pop(e, None)
        else:
            out[e] = cur
    return out


def _split_terms(text):
    terms = []
    depth = 0
    sign = 1
    cur = ""
    k = 0
    while k < len(text):
        ch = text[k]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and cur.strip():
            terms.append((sign, cur))
            sign = 1 if ch == "+" else -1
            cur = ""
        elif ch in "+-" and depth == 0 and not cur.strip():
            sign = sign * (1 if ch == "+" else -1)
        else:
            cur += ch
        k += 1
    if cur.strip():
        terms.append((sign, cur))
    return terms


def _balanced(text):
    depth = 0
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth < 0:
            return False
    return depth == 0


def parse_scalar(text):
    """Parse the output of Scalar.__str__ back into a Scalar."""
    text = text.strip()
    depth = 0
    split = None
    for k, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            split = k
            break
    if split is None:
        return Scalar(_parse_poly(text), {0: (1, 0)})
    return Scalar(_parse_poly(text[:split]), _parse_poly(text[split + 1:]))
