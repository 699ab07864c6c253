"""Representations of p-ary functions f: F_{p^n} -> F_p and conversions.

A PFunction is a dense truth table over the canonical element enumeration
of its field context.  The other representations round-trip through it:

    trace form        sum of Tr_n(a_i x^(d_i)) terms plus a constant
    univariate        coefficients a_0..a_{q-1} with a_{p*i} = a_i^p
    relative trace    one term Tr_{o(j)}(a_j x^j) per cyclotomic coset leader
    ANF               multivariate coefficients, exponents below p per variable

The algebraic degree is the maximal p-weight (base-p digit sum) of an
exponent carrying a nonzero univariate coefficient; it equals the total
degree of the ANF, which is how it is computed here (one pass of per-axis
Vandermonde solves, O(n p^(n+1))).

Univariate interpolation uses multiplicative-group character sums
(a_i = -sum_{x!=0} f(x) x^(-i)), validated by re-evaluation; this is
O(p^(2n)) and intended for n <= 8 at p = 3.
"""

from __future__ import annotations

import re
from functools import lru_cache

from .cyclo import CycInt
from .errors import InternalInconsistency, ParseError
from .gf import FFElem, FieldCtx, parse_field_spec
from .linalg import mat_inverse


def p_weight(e: int, p: int) -> int:
    """Base-p digit sum of an exponent."""
    w = 0
    while e:
        e, r = divmod(e, p)
        w += r
    return w


class PFunction:
    """A p-ary function as a truth table in canonical index order."""

    __slots__ = ("ctx", "values", "_degree")

    def __init__(self, ctx: FieldCtx, values) -> None:
        self.ctx = ctx
        values = list(values)
        if len(values) != ctx.q:
            raise ValueError("truth table must have p^n entries")
        p = ctx.p
        self.values = [v % p for v in values]
        self._degree = None

    @classmethod
    def zero(cls, ctx: FieldCtx) -> "PFunction":
        return cls(ctx, [0] * ctx.q)

    @classmethod
    def build(cls, ctx: FieldCtx, fn) -> "PFunction":
        """Tabulate a callable FFElem -> int."""
        return cls(ctx, [fn(ctx.from_index(i)) for i in range(ctx.q)])

    def __call__(self, x: FFElem) -> int:
        return self.values[x.index]

    def __eq__(self, other) -> bool:
        return (isinstance(other, PFunction) and self.ctx == other.ctx
                and self.values == other.values)

    def __hash__(self):
        return hash((self.ctx, tuple(self.values)))

    def __add__(self, other: "PFunction") -> "PFunction":
        p = self.ctx.p
        return PFunction(self.ctx, [(a + b) % p for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "PFunction") -> "PFunction":
        p = self.ctx.p
        return PFunction(self.ctx, [(a - b) % p for a, b in zip(self.values, other.values)])

    def __neg__(self) -> "PFunction":
        p = self.ctx.p
        return PFunction(self.ctx, [(-a) % p for a in self.values])

    def reflect(self) -> "PFunction":
        """x -> f(-x)."""
        ctx = self.ctx
        return PFunction(ctx, [self.values[ctx.neg_index(i)] for i in range(ctx.q)])

    def translate(self, a: FFElem) -> "PFunction":
        """x -> f(x + a)."""
        perm = self.ctx.shift_table(a.index)
        return PFunction(self.ctx, [self.values[perm[i]] for i in range(self.ctx.q)])

    def derivative(self, a: FFElem) -> "PFunction":
        """D_a f(x) = f(x + a) - f(x)."""
        ctx = self.ctx
        p = ctx.p
        perm = ctx.shift_table(a.index)
        vals = self.values
        return PFunction(ctx, [(vals[perm[i]] - vals[i]) % p for i in range(ctx.q)])

    def second_derivative(self, a: FFElem, b: FFElem) -> "PFunction":
        """D_a D_b f; symmetric in (a, b)."""
        return self.derivative(b).derivative(a)

    def value_counts(self) -> list[int]:
        counts = [0] * self.ctx.p
        for v in self.values:
            counts[v] += 1
        return counts

    def is_balanced(self) -> bool:
        """Each prime-field value occurs exactly p^(n-1) times.

        Cross-checked against the character sum in W_f(0) being the exact
        zero of Z[w]; the two can only disagree on an implementation bug.
        """
        counts = self.value_counts()
        target = self.ctx.q // self.ctx.p
        balanced = all(c == target for c in counts)
        char_zero = CycInt.from_exponent_counts(self.ctx.p, counts).is_zero()
        if balanced != char_zero:
            raise InternalInconsistency("balance count disagrees with character sum")
        return balanced

    def algebraic_degree(self) -> int:
        if self._degree is None:
            self._degree = self.to_anf().degree()
        return self._degree

    def to_anf(self) -> "ANF":
        return truth_to_anf(self)

    def __repr__(self) -> str:
        return "PFunction(p=%d, n=%d, deg=%s)" % (self.ctx.p, self.ctx.n, self.algebraic_degree())


class TraceForm:
    """f(x) = Tr_n(sum of coeff * x^exp) + constant."""

    __slots__ = ("ctx", "terms", "constant")

    def __init__(self, ctx: FieldCtx, terms, constant: int = 0) -> None:
        self.ctx = ctx
        merged: dict[int, FFElem] = {}
        for coeff, exp in terms:
            if not 0 <= exp <= ctx.q - 1:
                raise ValueError("exponent %d out of range [0, %d]" % (exp, ctx.q - 1))
            merged[exp] = merged[exp] + coeff if exp in merged else coeff
        self.terms = tuple(sorted(((c, e) for e, c in merged.items() if not c.is_zero()),
                                  key=lambda t: t[1]))
        self.constant = constant % ctx.p

    def truth_table(self) -> PFunction:
        ctx = self.ctx
        q, order = ctx.q, ctx.order
        base = self.constant
        vals = [0] * q
        # exponent-0 terms contribute Tr(coeff) everywhere, including x = 0
        zero_exp = sum(ctx.trace(c) for c, e in self.terms if e == 0) % ctx.p
        vals[0] = (base + zero_exp) % ctx.p
        live = [(c, e) for c, e in self.terms if e > 0]
        if not live:
            return PFunction(ctx, [(base + zero_exp) % ctx.p] * q)
        ctx.ensure_tables()
        exp_t = ctx.exp_table
        log_t = ctx.log_table
        p = ctx.p
        pairs = [(log_t[c.index], e) for c, e in live]
        troe = ctx._trace_of_exp
        for m in range(order):
            acc = base + zero_exp
            for lc, e in pairs:
                acc += troe[(lc + m * e) % order]
            vals[exp_t[m]] = acc % p
        return PFunction(ctx, vals)

    def __repr__(self) -> str:
        return "TraceForm(%d terms, constant=%d)" % (len(self.terms), self.constant)

    def spec_string(self) -> str:
        """Render in the function-spec grammar."""
        ctx = self.ctx
        parts = []
        for coeff, exp in self.terms:
            if coeff == ctx.one():
                cs = ""
            else:
                m = ctx.log_table[coeff.index] if ctx.log_table else None
                cs = ("g^%d*" % m) if m is not None else "?*"
            parts.append("%sx^%d" % (cs, exp))
        body = "+".join(parts) if parts else "0"
        out = "Tr(%s)" % body
        if self.constant:
            out += "+%d" % self.constant
        return out


def eval_trace_form(tf: TraceForm) -> PFunction:
    return tf.truth_table()


class RelativeTraceForm:
    """The unique form sum_j Tr_{o(j)}(a_j x^j) + top * x^(q-1) over coset
    leaders j, with a_j in the subfield of size p^o(j)."""

    __slots__ = ("ctx", "entries", "top_coeff")

    def __init__(self, ctx: FieldCtx, entries, top_coeff: int = 0) -> None:
        self.ctx = ctx
        self.entries = tuple(sorted(entries, key=lambda t: t[0]))
        self.top_coeff = top_coeff % ctx.p
        for j, a in self.entries:
            size = coset_size(j, ctx.p, ctx.order)
            if ctx.frobenius(a, size) != a:
                raise InternalInconsistency(
                    "coefficient at leader %d escapes its subfield" % j)

    def truth_table(self) -> PFunction:
        ctx = self.ctx
        p = ctx.p
        vals = [0] * ctx.q
        for idx in range(ctx.q):
            x = ctx.from_index(idx)
            acc = 0
            for j, a in self.entries:
                size = coset_size(j, p, ctx.order)
                t = a * ctx.power(x, j) if j else a
                s = t
                y = t
                for _ in range(size - 1):
                    y = ctx.frobenius(y, 1)
                    s = s + y
                if any(s.coeffs[1:]):
                    raise InternalInconsistency("relative trace left the prime field")
                acc += s.coeffs[0]
            if self.top_coeff and idx:
                acc += self.top_coeff  # x^(q-1) = 1 for x != 0
            vals[idx] = acc % p
        return PFunction(ctx, vals)

    def nonlinear_term_count(self) -> int:
        """Entries at leaders of p-weight >= 2 with nonzero coefficient."""
        n = sum(1 for j, a in self.entries if p_weight(j, self.ctx.p) >= 2)
        if self.top_coeff:
            n += 1
        return n

    def __repr__(self) -> str:
        return "RelativeTraceForm(%d entries, top=%d)" % (len(self.entries), self.top_coeff)


@lru_cache(maxsize=64)
def coset_leaders(p: int, modulus: int) -> tuple[int, ...]:
    """Leaders (minimal members) of the cyclotomic classes of p mod modulus."""
    seen = [False] * modulus
    leaders = []
    for e in range(modulus):
        if seen[e]:
            continue
        leaders.append(e)
        cur = e
        while True:
            seen[cur] = True
            cur = (cur * p) % modulus
            if cur == e:
                break
    return tuple(leaders)


def coset_leader(e: int, p: int, modulus: int) -> int:
    best = e
    cur = (e * p) % modulus
    while cur != e:
        if cur < best:
            best = cur
        cur = (cur * p) % modulus
    return best


def coset_size(e: int, p: int, modulus: int) -> int:
    size = 1
    cur = (e * p) % modulus
    while cur != e:
        size += 1
        cur = (cur * p) % modulus
    return size


def truth_to_univariate(f: PFunction) -> list[FFElem]:
    """Coefficients a_0..a_{q-1} of the unique univariate representation.

    a_i = -sum_{x != 0} f(x) x^(-i) for 0 < i < q-1, a_0 = f(0), and the
    top coefficient balances the total sum.  The result is validated by
    re-evaluation before being returned.
    """
    ctx = f.ctx
    ctx.ensure_tables()
    p, q, order = ctx.p, ctx.q, ctx.order
    exp_t = ctx.exp_table
    elems = [ctx.from_index(exp_t[m]).coeffs for m in range(order)]
    fvals = [f.values[exp_t[m]] for m in range(order)]
    live = [(m, v) for m, v in enumerate(fvals) if v]
    coeffs: list[FFElem] = [ctx.scalar(f.values[0])]
    n = ctx.n
    for i in range(1, order):
        acc = [0] * n
        for m, v in live:
            t = elems[(-i * m) % order]
            for pos in range(n):
                acc[pos] += v * t[pos]
        coeffs.append(ctx.elem([-a for a in acc]))
    total = sum(v for _, v in live) % p
    coeffs.append(ctx.scalar(-total - f.values[0]))
    check = eval_univariate(ctx, coeffs)
    if check.values != f.values:
        raise InternalInconsistency("univariate interpolation failed to re-evaluate")
    return coeffs


def eval_univariate(ctx: FieldCtx, coeffs) -> PFunction:
    """Evaluate a univariate coefficient list as a p-valued function.

    Raises if any value falls outside the prime subfield (the coefficients
    then do not satisfy a_{p*i} = a_i^p)."""
    ctx.ensure_tables()
    q, order = ctx.q, ctx.order
    exp_t = ctx.exp_table
    live = [(i, c.coeffs) for i, c in enumerate(coeffs) if not c.is_zero()]
    vals = [0] * q
    c0 = coeffs[0] if coeffs else ctx.zero()
    if any(c0.coeffs[1:]):
        raise InternalInconsistency("constant univariate coefficient not scalar")
    vals[0] = c0.coeffs[0]
    mul = ctx.mul_t
    elems = [ctx.from_index(exp_t[m]).coeffs for m in range(order)]
    n = ctx.n
    for m in range(order):
        acc = [0] * n
        for i, cc in live:
            t = elems[(i * m) % order] if i else elems[0]
            prod = mul(cc, t)
            for pos in range(n):
                acc[pos] += prod[pos]
        acc = [a % ctx.p for a in acc]
        if any(acc[1:]):
            raise InternalInconsistency("univariate evaluation left the prime field")
        vals[exp_t[m]] = acc[0]
    return PFunction(ctx, vals)


def to_relative_trace_form(f: PFunction) -> RelativeTraceForm:
    """Group univariate coefficients by cyclotomic class."""
    ctx = f.ctx
    p, order = ctx.p, ctx.order
    coeffs = truth_to_univariate(f)
    entries = []
    for j in coset_leaders(p, order):
        a = coeffs[j]
        if a.is_zero():
            continue
        # consistency across the class: a_{p e mod (q-1)} = a_e^p
        cur_e = j
        size = coset_size(j, p, order)
        for _ in range(size):
            nxt_e = (cur_e * p) % order
            if coeffs[nxt_e] != ctx.frobenius(coeffs[cur_e], 1):
                raise InternalInconsistency("conjugate coefficients inconsistent")
            cur_e = nxt_e
        entries.append((j, a))
    top = coeffs[ctx.q - 1]
    if any(top.coeffs[1:]):
        raise InternalInconsistency("top univariate coefficient not scalar")
    form = RelativeTraceForm(ctx, entries, top.coeffs[0])
    if form.truth_table().values != f.values:
        raise InternalInconsistency("relative trace form failed to re-evaluate")
    return form


def univariate_degree(coeffs, p: int) -> int:
    """Max p-weight over exponents with nonzero coefficient."""
    return max((p_weight(i, p) for i, c in enumerate(coeffs) if not c.is_zero()),
               default=0)


class ANF:
    """Multivariate coefficients indexed like truth tables: the coefficient
    of prod x_i^(e_i) sits at index sum e_i p^i."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs) -> None:
        self.ctx = ctx
        coeffs = list(coeffs)
        if len(coeffs) != ctx.q:
            raise ValueError("ANF needs p^n coefficients")
        self.coeffs = [c % ctx.p for c in coeffs]

    def degree(self) -> int:
        p = self.ctx.p
        return max((p_weight(i, p) for i, c in enumerate(self.coeffs) if c), default=0)

    def truth_table(self) -> PFunction:
        return anf_to_truth(self)

    def __eq__(self, other) -> bool:
        return (isinstance(other, ANF) and self.ctx == other.ctx
                and self.coeffs == other.coeffs)

    def __repr__(self) -> str:
        return "ANF(p=%d, n=%d, deg=%d)" % (self.ctx.p, self.ctx.n, self.degree())


@lru_cache(maxsize=8)
def _vandermonde(p: int):
    v = [[pow(t, e, p) if e else 1 for e in range(p)] for t in range(p)]
    return v, mat_inverse(v, p)


def _axis_apply(vals: list[int], p: int, n: int, mat) -> list[int]:
    out = list(vals)
    q = p ** n
    for axis in range(n):
        stride = p ** axis
        block = stride * p
        for base in range(0, q, block):
            for off in range(base, base + stride):
                idxs = range(off, off + block - stride + 1, stride)
                col = [out[i] for i in idxs]
                for r, i in enumerate(idxs):
                    out[i] = sum(mat[r][c] * col[c] for c in range(p)) % p
    return out


def truth_to_anf(f: PFunction) -> ANF:
    v, vinv = _vandermonde(f.ctx.p)
    return ANF(f.ctx, _axis_apply(f.values, f.ctx.p, f.ctx.n, vinv))


def anf_to_truth(a: ANF) -> PFunction:
    v, vinv = _vandermonde(a.ctx.p)
    return PFunction(a.ctx, _axis_apply(a.coeffs, a.ctx.p, a.ctx.n, v))


# -- module-level op aliases ----------------------------------------------------

def derivative(f: PFunction, a: FFElem) -> PFunction:
    return f.derivative(a)


def second_derivative(f: PFunction, a: FFElem, b: FFElem) -> PFunction:
    return f.second_derivative(a, b)


def is_balanced(f: PFunction) -> bool:
    return f.is_balanced()


def algebraic_degree(f: PFunction) -> int:
    return f.algebraic_degree()


# -- the function-spec grammar ----------------------------------------------------

_TERM_RE = re.compile(r"(?:(g\^\d+|\d+)\*?)?x(?:\^(\d+))?")


def parse_function_spec(text: str):
    """Parse "p=3 n=6 f=Tr(g^7*x^98)" into (FieldCtx, TraceForm).

    Grammar: field spec, then f=Tr(term +- term ...) optionally followed by
    +c / -c for a prime-field constant.  A term is [coef][*]x^E with coef a
    power of the context primitive (g^M), a decimal integer, or omitted.
    """
    at = text.find("f=")
    if at < 0:
        raise ParseError("missing 'f=' in %r" % text)
    ctx = parse_field_spec(text[:at])
    body = re.sub(r"\s+", "", text[at + 2:])
    if not body.startswith("Tr("):
        raise ParseError("function must start with Tr( at position %d" % (at + 2))
    depth, close = 1, None
    for i in range(3, len(body)):
        if body[i] == "(":
            depth += 1
        elif body[i] == ")":
            depth -= 1
            if depth == 0:
                close = i
                break
    if close is None:
        raise ParseError("unbalanced parentheses in function spec")
    inner = body[3:close]
    rest = body[close + 1:]
    constant = 0
    if rest:
        m = re.fullmatch(r"([+-])(\d+)", rest)
        if not m:
            raise ParseError("junk after Tr(...) at position %d: %r" % (at + 2 + close + 1, rest))
        constant = int(m.group(2)) * (1 if m.group(1) == "+" else -1)
    terms = []
    pos = 0
    sign = 1
    if inner.startswith(("+", "-")):
        sign = 1 if inner[0] == "+" else -1
        pos = 1
    while pos < len(inner):
        m = _TERM_RE.match(inner, pos)
        if not m:
            raise ParseError("bad term at position %d in %r" % (pos, inner))
        coef_tok, exp_tok = m.group(1), m.group(2)
        exp = int(exp_tok) if exp_tok else 1
        if coef_tok is None:
            coeff = ctx.one()
        elif coef_tok.startswith("g^"):
            coeff = ctx.gen_power(int(coef_tok[2:]))
        else:
            coeff = ctx.scalar(int(coef_tok))
        terms.append((coeff.scale(sign) if sign < 0 else coeff, exp))
        pos = m.end()
        if pos == len(inner):
            break
        if inner[pos] not in "+-":
            raise ParseError("expected + or - at position %d in %r" % (pos, inner))
        sign = 1 if inner[pos] == "+" else -1
        pos += 1
        if pos == len(inner):
            raise ParseError("dangling sign at end of %r" % inner)
    return ctx, TraceForm(ctx, terms, constant)
