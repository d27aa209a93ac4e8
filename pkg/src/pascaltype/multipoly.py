"""Sparse multivariate polynomials over Q and determinants of polynomial matrices.

A polynomial is a map from exponent tuples (one entry per variable) to
nonzero rational coefficients.  Integral coefficients are stored as ``int``
so that the large identity expansions stay in machine-friendly arithmetic;
``Fraction(3) == 3`` and both hash alike, so this never affects equality.

The canonical term order is graded reverse lexicographic with variable 0
largest.  It only matters for printing and the text dump format; equality is
map equality.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .errors import DimensionError, ResourceError
from .exact import scalar

Exponent = tuple[int, ...]

DEFAULT_TERM_CEILING = 50_000_000


def _norm(c):
    c = scalar(c) if not isinstance(c, (int, Fraction)) else c
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def grevlex_key(e: Exponent) -> tuple:
    """Sort key; a larger key is a larger monomial in grevlex."""
    return (sum(e), tuple(-x for x in reversed(e)))


class MPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] | None = None):
        self.nvars = nvars
        clean: dict[Exponent, object] = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != nvars or any(x < 0 for x in e):
                    raise DimensionError(f"bad exponent {e} for {nvars} variables")
                c = _norm(c)
                if c:
                    clean[e] = c
        self.terms = clean

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> MPoly:
        # trusted constructor: terms already clean
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def zero(cls, nvars: int) -> MPoly:
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, nvars: int, c) -> MPoly:
        c = _norm(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def var(cls, nvars: int, i: int) -> MPoly:
        if not 0 <= i < nvars:
            raise DimensionError(f"variable index {i} out of range for {nvars} variables")
        return cls._raw(nvars, {tuple(int(k == i) for k in range(nvars)): 1})

    @classmethod
    def variables(cls, nvars: int) -> list[MPoly]:
        return [cls.var(nvars, i) for i in range(nvars)]

    def _coerce(self, other) -> MPoly:
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise DimensionError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        return MPoly.const(self.nvars, other)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MPoly.const(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __neg__(self) -> MPoly:
        return MPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __add__(self, other) -> MPoly:
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = _norm(s)
            else:
                out.pop(e, None)
        return MPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __sub__(self, other) -> MPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> MPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> MPoly:
        return poly_mul(self, self._coerce(other))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MPoly:
        if k < 0:
            raise ValueError("negative power")
        out = MPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def total_degree(self) -> int:
        """Degree of the polynomial; -1 for zero."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, block: Iterable[int]) -> int:
        """Maximum combined degree in a block of variables."""
        block = list(block)
        return max((sum(e[i] for i in block) for e in self.terms), default=-1)

    def is_homogeneous_in(self, block: Iterable[int]) -> bool:
        block = list(block)
        return len({sum(e[i] for i in block) for e in self.terms}) <= 1

    def sorted_terms(self) -> list[tuple[Exponent, object]]:
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = point[0]
        return poly_eval(self, point)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"x{i}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k)
            parts.append(f"{c}*{mono}" if mono else f"{c}")
        return " + ".join(parts).replace("+ -", "- ")


def poly_mul(p: MPoly, q: MPoly) -> MPoly:
    if p.nvars != q.nvars:
        raise DimensionError(f"variable count mismatch: {p.nvars} vs {q.nvars}")
    if not p.terms or not q.terms:
        return MPoly.zero(p.nvars)
    if len(p.terms) > len(q.terms):
        p, q = q, p
    out: dict[Exponent, object] = {}
    get = out.get
    qitems = list(q.terms.items())
    for e1, c1 in p.terms.items():
        for e2, c2 in qitems:
            e = tuple([a + b for a, b in zip(e1, e2)])
            out[e] = get(e, 0) + c1 * c2
    return MPoly._raw(p.nvars, {e: _norm(c) for e, c in out.items() if c})


def poly_eval(p: MPoly, point: Sequence) -> Fraction:
    if len(point) != p.nvars:
        raise DimensionError(f"point has {len(point)} coordinates, polynomial has {p.nvars} variables")
    point = [scalar(x) for x in point]
    total = Fraction(0)
    powers: list[dict[int, Fraction]] = [{} for _ in point]
    for e, c in p.terms.items():
        t = Fraction(c)
        for i, k in enumerate(e):
            if k:
                cache = powers[i]
                v = cache.get(k)
                if v is None:
                    v = cache[k] = point[i] ** k
                t *= v
                if not t:
                    break
        total += t
    return total


def poly_derivative(p: MPoly, var: int) -> MPoly:
    if not 0 <= var < p.nvars:
        raise DimensionError(f"variable index {var} out of range for {p.nvars} variables")
    out = {}
    for e, c in p.terms.items():
        k = e[var]
        if k:
            e2 = e[:var] + (k - 1,) + e[var + 1:]
            out[e2] = _norm(out.get(e2, 0) + k * c)
    return MPoly._raw(p.nvars, {e: c for e, c in out.items() if c})


def substitute(p: MPoly, images: Sequence[MPoly]) -> MPoly:
    """Compose ``p`` with polynomial images of each of its variables."""
    if len(images) != p.nvars:
        raise DimensionError("one image per variable required")
    nv = images[0].nvars
    result = MPoly.zero(nv)
    cache: dict[tuple[int, int], MPoly] = {}
    for e, c in p.terms.items():
        t = MPoly.const(nv, c)
        for i, k in enumerate(e):
            if k:
                pw = cache.get((i, k))
                if pw is None:
                    pw = cache[(i, k)] = images[i] ** k
                t = t * pw
        result = result + t
    return result


class PolyMat:
    """Dense matrix whose entries are MPoly in a shared set of variables."""

    __slots__ = ("rows", "cols", "nvars", "entries")

    def __init__(self, rows: Sequence[Sequence], nvars: int | None = None):
        rows = [list(r) for r in rows]
        if nvars is None:
            nvars = next((x.nvars for r in rows for x in r if isinstance(x, MPoly)), None)
            if nvars is None:
                raise DimensionError("cannot infer the number of variables")
        ncols = len(rows[0]) if rows else 0
        entries = []
        for r in rows:
            if len(r) != ncols:
                raise DimensionError("ragged rows")
            for x in r:
                x = x if isinstance(x, MPoly) else MPoly.const(nvars, x)
                if x.nvars != nvars:
                    raise DimensionError("entries must share nvars")
                entries.append(x)
        self.rows = len(rows)
        self.cols = ncols
        self.nvars = nvars
        self.entries = tuple(entries)

    def __getitem__(self, ij: tuple[int, int]) -> MPoly:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[MPoly, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def swap_rows(self, i: int, j: int) -> PolyMat:
        rows = [list(self.row(k)) for k in range(self.rows)]
        rows[i], rows[j] = rows[j], rows[i]
        return PolyMat(rows, self.nvars)

    def evaluate(self, point: Sequence):
        from .exact import Mat
        return Mat(self.rows, self.cols, [poly_eval(x, point) for x in self.entries])

    def degree_bound(self) -> int:
        """Sum over rows of the largest entry degree; bounds the determinant's degree."""
        return sum(max(x.total_degree() for x in self.row(i)) for i in range(self.rows))


def poly_det(m: PolyMat, term_ceiling: int = DEFAULT_TERM_CEILING,
             progress: Callable[[int, int], None] | None = None) -> MPoly:
    """Determinant by Laplace expansion with memoised minors.

    ``table[S]`` holds the minor of the first ``k`` rows on the column set
    ``S`` (a bitmask with ``k`` bits).  Expanding the ``(k+1)``-row minor on
    ``S | {j}`` along its last row gives the recurrence
    ``minor(S | {j}) = sum_j (-1)^(k + #{s in S : s < j}) m[k][j] minor(S)``.
    Only subsets reachable through nonzero entries are stored, so sparse
    rows stay cheap.

    Raises :class:`ResourceError` as soon as the stored terms exceed
    ``term_ceiling``.
    """
    if m.rows != m.cols:
        raise DimensionError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    nv = m.nvars
    if n == 0:
        return MPoly.const(nv, 1)
    table: dict[int, MPoly] = {0: MPoly.const(nv, 1)}
    for k in range(n):
        row = [(j, x) for j, x in enumerate(m.row(k)) if x]
        nxt: dict[int, dict] = {}
        stored = 0
        for mask, minor in table.items():
            for j, entry in row:
                bit = 1 << j
                if mask & bit:
                    continue
                # entry sits in position pos = #{s in mask : s < j} of the new
                # (k+1)x(k+1) submatrix, in its last row k
                pos = (mask & (bit - 1)).bit_count()
                negate = (k + pos) & 1
                acc = nxt.get(mask | bit)
                if acc is None:
                    acc = nxt[mask | bit] = {}
                before = len(acc)
                _addmul_into(acc, minor, entry, negate)
                stored += len(acc) - before
                if stored > term_ceiling:
                    raise ResourceError(
                        f"determinant expansion exceeded {term_ceiling} terms at row {k + 1}/{n}")
        table = {mask: MPoly._raw(nv, {e: _norm(c) for e, c in acc.items() if c})
                 for mask, acc in nxt.items()}
        table = {mask: p for mask, p in table.items() if p}
        if progress is not None:
            progress(k + 1, sum(len(p) for p in table.values()))
        if not table:
            return MPoly.zero(nv)
    return table.get((1 << n) - 1, MPoly.zero(nv))


def _addmul_into(acc: dict, p: MPoly, q: MPoly, negate: int) -> None:
    get = acc.get
    qitems = list(q.terms.items())
    for e1, c1 in p.terms.items():
        if negate:
            c1 = -c1
        for e2, c2 in qitems:
            e = tuple([a + b for a, b in zip(e1, e2)])
            acc[e] = get(e, 0) + c1 * c2


def cofactor_det(rows: Sequence[Sequence]):
    """Plain cofactor expansion along the first row; works for any ring elements."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        if not rows[0][j]:
            continue
        sub = [r[:j] + r[j + 1:] for r in rows[1:]]
        t = rows[0][j] * cofactor_det(sub)
        if j % 2:
            t = -t
        total = t if total is None else total + t
    return 0 if total is None else total


# ---------------------------------------------------------------------------
# text dump: one term per line, ``coeff e1 e2 ... en``, canonical order

def dump_terms(p: MPoly) -> Iterator[str]:
    for e, c in p.sorted_terms():
        yield " ".join([str(c), *map(str, e)])


def dumps(p: MPoly) -> str:
    return "".join(line + "\n" for line in dump_terms(p))


def loads(text: str, nvars: int) -> MPoly:
    terms: dict[Exponent, object] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != nvars + 1:
            raise DimensionError(f"line {lineno}: expected {nvars + 1} fields, got {len(fields)}")
        e = tuple(int(x) for x in fields[1:])
        if e in terms:
            raise ValueError(f"line {lineno}: duplicate monomial")
        terms[e] = Fraction(fields[0])
    return MPoly(nvars, terms)


def monomials_of_degree(nvars: int, degree: int) -> Iterator[Exponent]:
    """All exponent vectors of the given total degree (stars and bars)."""
    for bars in combinations(range(degree + nvars - 1), nvars - 1):
        prev = -1
        e = []
        for b in bars:
            e.append(b - prev - 1)
            prev = b
        e.append(degree + nvars - 2 - prev)
        yield tuple(e)
