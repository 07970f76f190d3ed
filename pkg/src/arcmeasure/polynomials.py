"""Sparse multivariate polynomials with rational coefficients.

Terms are stored as a map from exponent vector to coefficient, with the
exponent vector aligned to an explicit ordered tuple of variable names.
Nothing here is clever; the point is exactness and a deterministic text
form shared with the command line tools.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


class ParseError(ValueError):
    """Input text rejected, with the offending character offset."""

    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class ArityMismatch(ValueError):
    """Dimensions of the supplied data do not line up."""


class ConstantInput(ValueError):
    """A nonconstant polynomial was required."""


def _normalize(terms):
    return {e: c for e, c in terms.items() if c != 0}


class MultiPoly:
    """Polynomial in the given variables over the rationals."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms=None):
        object.__setattr__(self, "variables", tuple(variables))
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(self.variables):
                raise ArityMismatch(
                    f"exponent vector {exps} does not match "
                    f"{len(self.variables)} variables")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent in polynomial")
            c = Fraction(c)
            if c:
                clean[exps] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def zero(cls, variables) -> "MultiPoly":
        return cls(variables, {})

    @classmethod
    def constant(cls, variables, value) -> "MultiPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): Fraction(value)})

    @classmethod
    def variable(cls, variables, index: int) -> "MultiPoly":
        variables = tuple(variables)
        exps = [0] * len(variables)
        exps[index] = 1
        return cls(variables, {tuple(exps): Fraction(1)})

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.variables, other)
        if isinstance(other, MultiPoly):
            return self.variables == other.variables and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.variables, other)
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise ArityMismatch("polynomials over different variables")
            return other
        return None

    def __neg__(self):
        return MultiPoly(self.variables,
                         {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly(self.variables, out)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MultiPoly(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = MultiPoly.constant(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def diff(self, index: int) -> "MultiPoly":
        """Partial derivative with respect to ``variables[index]``."""
        out = {}
        for e, c in self.terms.items():
            k = e[index]
            if k == 0:
                continue
            new = list(e)
            new[index] = k - 1
            new = tuple(new)
            s = out.get(new, 0) + c * k
            if s:
                out[new] = s
            else:
                out.pop(new, None)
        return MultiPoly(self.variables, out)

    def evaluate(self, values) -> Fraction:
        """Value at a rational point, given per variable name or position."""
        if isinstance(values, dict):
            point = [Fraction(values[v]) for v in self.variables]
        else:
            point = [Fraction(v) for v in values]
            if len(point) != len(self.variables):
                raise ArityMismatch("point has wrong number of coordinates")
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term *= x ** k
            total += term
        return total

    def sorted_terms(self):
        # graded lexicographic, largest first: stable render order
        return sorted(self.terms.items(),
                      key=lambda item: (sum(item[0]), item[0]),
                      reverse=True)

    def __repr__(self):
        return f"MultiPoly({render_poly(self)!r}, vars={self.variables})"


def render_poly(p: MultiPoly) -> str:
    """Deterministic text form with explicit ``*`` between factors."""
    if not p.terms:
        return "0"
    parts = []
    for i, (exps, coeff) in enumerate(p.sorted_terms()):
        factors = []
        for name, k in zip(p.variables, exps):
            if k == 1:
                factors.append(name)
            elif k > 1:
                factors.append(f"{name}^{k}")
        mag = abs(coeff)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if i == 0:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            sign = "+" if coeff > 0 else "-"
            parts.append(f" {sign} {body}")
    return "".join(parts)


def parse_poly(text: str, variables) -> MultiPoly:
    """Parse ``+ - * ^`` expressions over the declared variables.

    Implicit multiplication is rejected, as are parentheses; inputs are
    expanded polynomials like ``y^2 - x^3`` or ``3/2*x*y``.  Rational
    literals use ``/`` with no surrounding spaces.
    """
    variables = tuple(variables)
    index = {v: i for i, v in enumerate(variables)}
    s = text
    n = len(s)
    pos = 0

    def skip_ws(i):
        while i < n and s[i] in " \t":
            i += 1
        return i

    def lex_number(i):
        k = i
        while k < n and s[k].isdigit():
            k += 1
        if k == i:
            raise ParseError("expected number", i)
        num = int(s[i:k])
        if k < n and s[k] == "/" and k + 1 < n and s[k + 1].isdigit():
            j = k + 1
            while j < n and s[j].isdigit():
                j += 1
            return Fraction(num, int(s[k + 1:j])), j
        return Fraction(num), k

    def lex_ident(i):
        k = i
        while k < n and (s[k].isalnum() or s[k] == "_"):
            k += 1
        return s[i:k], k

    def parse_factor(i):
        i = skip_ws(i)
        if i >= n:
            raise ParseError("expected factor", i)
        if s[i].isdigit():
            value, j = lex_number(i)
            base = MultiPoly.constant(variables, value)
        elif s[i].isalpha() or s[i] == "_":
            name, j = lex_ident(i)
            if name not in index:
                raise ParseError(f"unknown variable {name!r}", i)
            base = MultiPoly.variable(variables, index[name])
        else:
            raise ParseError(f"unexpected character {s[i]!r}", i)
        if j < n and s[j] == "^":
            j += 1
            if j >= n or not s[j].isdigit():
                raise ParseError("expected integer exponent", j)
            k = j
            while k < n and s[k].isdigit():
                k += 1
            base = base ** int(s[j:k])
            j = k
        j2 = skip_ws(j)
        if j2 < n and (s[j2].isalnum() or s[j2] == "_"):
            raise ParseError("implicit multiplication is not allowed", j2)
        return base, j

    def parse_term(i):
        acc, i = parse_factor(i)
        while True:
            j = skip_ws(i)
            if j < n and s[j] == "*":
                f, i = parse_factor(j + 1)
                acc = acc * f
            else:
                return acc, i

    total = MultiPoly.zero(variables)
    pos = skip_ws(pos)
    sign = 1
    if pos < n and s[pos] in "+-":
        sign = -1 if s[pos] == "-" else 1
        pos += 1
    if skip_ws(pos) >= n:
        raise ParseError("empty polynomial", skip_ws(pos))
    while True:
        term, pos = parse_term(pos)
        total = total + (term if sign == 1 else -term)
        pos = skip_ws(pos)
        if pos >= n:
            return total
        if s[pos] == "+":
            sign = 1
        elif s[pos] == "-":
            sign = -1
        else:
            raise ParseError(f"unexpected character {s[pos]!r}", pos)
        pos += 1
        if skip_ws(pos) >= n:
            raise ParseError("dangling operator", pos)


class PolySystem:
    """Finite generating set over a common variable tuple.

    Zero generators are dropped and duplicates collapse; input order of
    the survivors is preserved.
    """

    __slots__ = ("variables", "generators")

    def __init__(self, variables, generators):
        variables = tuple(variables)
        if not variables:
            raise ValueError("a system needs at least one variable")
        seen = []
        for g in generators:
            if not isinstance(g, MultiPoly):
                raise TypeError("generators must be MultiPoly")
            if g.variables != variables:
                raise ArityMismatch("generator over a different variable set")
            if g and g not in seen:
                seen.append(g)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "generators", tuple(seen))

    def __setattr__(self, name, value):
        raise AttributeError("PolySystem is immutable")

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __eq__(self, other):
        if isinstance(other, PolySystem):
            return (self.variables == other.variables
                    and set(self.generators) == set(other.generators))
        return NotImplemented

    def __repr__(self):
        inner = ", ".join(render_poly(g) for g in self.generators)
        return f"PolySystem[{inner}]"


def poly_det(matrix) -> MultiPoly:
    """Determinant of a square matrix of polynomials, Laplace expansion."""
    size = len(matrix)
    if size == 0:
        raise ValueError("empty matrix")
    variables = matrix[0][0].variables
    if size == 1:
        return matrix[0][0]
    total = MultiPoly.zero(variables)
    for j in range(size):
        entry = matrix[0][j]
        if not entry:
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        cofactor = entry * poly_det(minor)
        total = total + (cofactor if j % 2 == 0 else -cofactor)
    return total


def matrix_minors(matrix, size: int):
    """All ``size x size`` minor determinants, row subsets before columns."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    if size < 1 or size > rows or size > cols:
        raise ArityMismatch(
            f"no {size}x{size} minors of a {rows}x{cols} matrix")
    out = []
    for ri in itertools.combinations(range(rows), size):
        for ci in itertools.combinations(range(cols), size):
            sub = [[matrix[r][c] for c in ci] for r in ri]
            out.append(poly_det(sub))
    return out


def jacobian_minors(fs, ambient_dim: int, variety_dim: int) -> PolySystem:
    """Maximal minors of the Jacobian of a codimension ``N - d`` system.

    ``fs`` must consist of exactly ``ambient_dim - variety_dim``
    polynomials in ``ambient_dim`` variables; the result collects every
    ``(N-d) x (N-d)`` minor of their Jacobian matrix, canonicalized.
    """
    fs = list(fs)
    codim = ambient_dim - variety_dim
    if codim < 1 or len(fs) != codim:
        raise ArityMismatch(
            f"expected {codim} defining polynomials, got {len(fs)}")
    variables = fs[0].variables
    if len(variables) != ambient_dim:
        raise ArityMismatch(
            f"polynomials have {len(variables)} variables, "
            f"ambient dimension is {ambient_dim}")
    jac = [[f.diff(j) for j in range(ambient_dim)] for f in fs]
    return PolySystem(variables, matrix_minors(jac, codim))


def hypersurface_singular_ideal(f: MultiPoly) -> PolySystem:
    """Generators cutting out the singular locus of a hypersurface.

    For one defining equation these are just the partial derivatives.
    Higher-codimension input needs user-supplied generators instead; a
    constant polynomial has no hypersurface attached and is rejected.
    """
    if f.is_constant():
        raise ConstantInput("defining polynomial must be nonconstant")
    partials = [f.diff(j) for j in range(len(f.variables))]
    return PolySystem(f.variables, partials)
