"""Polynomials in dotted-edge variables with Scalar coefficients.

Sparse representation: a sorted tuple of variable names plus a map from
exponent tuples to nonzero Scalars.  Gram determinants keep each variable
at degree <= 2, so everything here stays tiny.
"""

from __future__ import annotations

from .rationals import QQ, as_rational, is_rational
from .scalars import Scalar


class RhoPoly:
    __slots__ = ("vars", "terms")
    __hash__ = None

    def __init__(self, vars=(), terms=None):
        self.vars = tuple(vars)
        self.terms = dict(terms or {})
        self._normalize()

    def _normalize(self):
        dead = [e for e, c in self.terms.items() if c.is_zero()]
        for e in dead:
            del self.terms[e]
        if not self.vars:
            return
        used = [False] * len(self.vars)
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used[i] = True
        if all(used):
            return
        keep = [i for i, u in enumerate(used) if u]
        new_vars = tuple(self.vars[i] for i in keep)
        new_terms = {}
        for e, c in self.terms.items():
            ne = tuple(e[i] for i in keep)
            new_terms[ne] = new_terms.get(ne, Scalar.zero()) + c if ne in new_terms else c
        self.vars = new_vars
        self.terms = new_terms

    # -- construction ----------------------------------------------------

    @staticmethod
    def from_scalar(s) -> "RhoPoly":
        s = s if isinstance(s, Scalar) else Scalar.from_rational(s)
        if s.is_zero():
            return RhoPoly((), {})
        return RhoPoly((), {(): s})

    @staticmethod
    def zero() -> "RhoPoly":
        return RhoPoly((), {})

    @staticmethod
    def one() -> "RhoPoly":
        return RhoPoly.from_scalar(1)

    @staticmethod
    def var(name: str) -> "RhoPoly":
        return RhoPoly((name,), {(1,): Scalar.one()})

    @staticmethod
    def _coerce(x) -> "RhoPoly":
        if isinstance(x, RhoPoly):
            return x
        if isinstance(x, Scalar) or is_rational(x):
            return RhoPoly.from_scalar(x)
        raise TypeError(f"cannot coerce {x!r} to RhoPoly")

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_scalar(self) -> bool:
        return not self.vars

    def as_scalar(self) -> Scalar:
        if not self.is_scalar():
            raise ValueError(f"polynomial still involves {self.vars}")
        return self.terms.get((), Scalar.zero())

    def constant_term(self) -> Scalar:
        zero_exp = (0,) * len(self.vars)
        return self.terms.get(zero_exp, Scalar.zero())

    def degree_in(self, var: str) -> int:
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max((e[i] for e in self.terms), default=0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def coefficients(self):
        return list(self.terms.values())

    @staticmethod
    def _merge_vars(a: "RhoPoly", b: "RhoPoly"):
        vs = tuple(sorted(set(a.vars) | set(b.vars)))

        def remap(p):
            idx = [vs.index(v) for v in p.vars]
            out = {}
            for e, c in p.terms.items():
                ne = [0] * len(vs)
                for i, k in zip(idx, e):
                    ne[i] = k
                out[tuple(ne)] = c
            return out

        return vs, remap(a), remap(b)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = RhoPoly._coerce(other)
        vs, ta, tb = RhoPoly._merge_vars(self, other)
        out = dict(ta)
        for e, c in tb.items():
            out[e] = out[e] + c if e in out else c
        return RhoPoly(vs, out)

    __radd__ = __add__

    def __neg__(self):
        return RhoPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-RhoPoly._coerce(other))

    def __rsub__(self, other):
        return RhoPoly._coerce(other) - self

    def __mul__(self, other):
        other = RhoPoly._coerce(other)
        vs, ta, tb = RhoPoly._merge_vars(self, other)
        out = {}
        for ea, ca in ta.items():
            for eb, cb in tb.items():
                e = tuple(x + y for x, y in zip(ea, eb)) if vs else ()
                c = ca * cb
                out[e] = out[e] + c if e in out else c
        return RhoPoly(vs, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, RhoPoly):
            if not other.is_scalar():
                raise TypeError("use exact_div for polynomial division")
            other = other.as_scalar()
        if is_rational(other):
            other = Scalar.from_rational(other)
        inv = other.inverse()
        return RhoPoly(self.vars, {e: c * inv for e, c in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = RhoPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        try:
            other = RhoPoly._coerce(other)
        except TypeError:
            return NotImplemented
        return (self - other).is_zero()

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    # -- substitution ---------------------------------------------------------

    def substitute(self, var: str, value) -> "RhoPoly":
        """Replace `var` by a Scalar, a rational, or another RhoPoly."""
        if var not in self.vars:
            return self
        if isinstance(value, Scalar) or is_rational(value):
            value = RhoPoly.from_scalar(value)
        i = self.vars.index(var)
        rest_vars = self.vars[:i] + self.vars[i + 1 :]
        out = RhoPoly.zero()
        powers = {0: RhoPoly.one()}
        for e, c in self.terms.items():
            k = e[i]
            if k not in powers:
                powers[k] = value**k
            mono = RhoPoly(rest_vars, {e[:i] + e[i + 1 :]: c})
            out = out + mono * powers[k]
        return out

    def substitute_all(self, assignment: dict) -> "RhoPoly":
        out = self
        for v, x in assignment.items():
            out = out.substitute(v, x)
        return out

    def shift_vars(self) -> "RhoPoly":
        """Substitute v := 1 + v for every variable (the rho = 1 + t change)."""
        out = self
        for v in self.vars:
            out = out.substitute(v, RhoPoly.var(v) + 1)
        return out

    def univariate_coeffs(self, var: str) -> list:
        """Dense Scalar coefficient list of a univariate polynomial."""
        if self.vars not in ((), (var,)):
            raise ValueError(f"polynomial is not univariate in {var}: vars={self.vars}")
        if self.is_scalar():
            c = self.constant_term()
            return [] if c.is_zero() else [c]
        d = self.degree_in(var)
        out = [Scalar.zero()] * (d + 1)
        for e, c in self.terms.items():
            out[e[0]] = c
        return out

    # -- exact division ------------------------------------------------------

    def exact_div(self, other: "RhoPoly") -> "RhoPoly":
        """Exact polynomial division; raises if the division leaves a remainder."""
        other = RhoPoly._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if other.is_scalar():
            return self / other.as_scalar()
        vs, ta, tb = RhoPoly._merge_vars(self, other)
        rem = dict(ta)

        def lead(terms):
            return max(terms)  # lex order on exponent tuples

        lb = lead(tb)
        quot = {}
        while rem:
            la = lead(rem)
            diff = tuple(x - y for x, y in zip(la, lb))
            if any(d < 0 for d in diff):
                raise ArithmeticError("polynomial division is not exact")
            c = rem[la] / tb[lb]
            quot[diff] = quot.get(diff, Scalar.zero()) + c
            for eb, cb in tb.items():
                e = tuple(x + y for x, y in zip(diff, eb))
                val = rem.get(e, Scalar.zero()) - c * cb
                if val.is_zero():
                    rem.pop(e, None)
                else:
                    rem[e] = val
        return RhoPoly(vs, quot)

    # -- output -----------------------------------------------------------------

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"{v}^{k}" if k > 1 else v for v, k in zip(self.vars, e) if k
            )
            cs = str(c)
            if mono:
                parts.append(f"({cs})*{mono}")
            else:
                parts.append(f"({cs})")
        return " + ".join(parts)

    __repr__ = __str__


def poly(terms: dict, vars=()) -> RhoPoly:
    """Convenience constructor: {exponent tuple: Scalar-or-rational}."""
    fixed = {}
    for e, c in terms.items():
        fixed[tuple(e)] = c if isinstance(c, Scalar) else Scalar.from_rational(as_rational(c))
    return RhoPoly(tuple(vars), fixed)
