"""Linear algebra of Artinian quotients R/I: multiplication structure,
socles, graded socle ranks, type, Hilbert functions, and radical-maximality
certification.

The socle of a graded quotient is computed degree slice by degree slice so
its basis is homogeneous by construction; the ungraded path stacks the
multiplication matrices and takes one kernel.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    GradixError,
    NotGraded,
    NotPositivelyGraded,
    NotZeroDimensional,
    RadicalNotMaximal,
)
from .groebner import Ideal, ideal_equal, standard_monomials
from .linalg import kernel_basis
from .poly import Polynomial, is_homogeneous
from .upoly import qq_irreducible, squarefree_part


class QuotientBasis:
    """Standard monomials of a zero-dimensional ideal together with the
    multiplication matrices of all presentation variables."""

    def __init__(self, ideal: Ideal, order=None):
        self.ideal = ideal
        self.ring = ideal.ring
        self.order = order or self.ring.default_order()
        sm = standard_monomials(ideal, self.order)
        if sm is None:
            raise NotZeroDimensional(f"quotient by {ideal!r} is not finite-dimensional")
        self.monomials: list[tuple] = sm
        self.index = {m: i for i, m in enumerate(sm)}
        self.dimension = len(sm)
        self.degrees = [self.ring.weighted_degree(m) for m in sm]
        field = self.ring.field
        self.columns: list[list[dict]] = []
        for i in range(self.ring.npres):
            cols = []
            for b in self.monomials:
                shifted = list(b)
                shifted[i] += 1
                shifted = tuple(shifted)
                if shifted in self.index:
                    cols.append({self.index[shifted]: field.one()})
                else:
                    nf = ideal.normal_form(self.ring.monomial(shifted), self.order)
                    cols.append({self.index[m]: c for m, c in nf.terms.items()})
            self.columns.append(cols)
        zero_mono = (0,) * self.ring.npres
        if self.dimension:
            unit = [field.zero()] * self.dimension
            unit[self.index[zero_mono]] = field.one()
            self._mono_nf: dict = {zero_mono: unit}
        else:
            self._mono_nf = {zero_mono: []}

    # -- coordinates ---------------------------------------------------------

    def nf_monomial(self, m: tuple) -> list:
        """Coordinates of the normal form of a monomial, memoized and
        computed incrementally through the multiplication structure."""
        cache = self._mono_nf
        if m in cache:
            return cache[m]
        i = next(k for k, e in enumerate(m) if e)
        prev = list(m)
        prev[i] -= 1
        v = self.apply_var(i, self.nf_monomial(tuple(prev)))
        cache[m] = v
        return v

    def nf_coords(self, f: Polynomial) -> list:
        field = self.ring.field
        nf = self.ideal.normal_form(f, self.order)
        v = [field.zero()] * self.dimension
        for m, c in nf.terms.items():
            v[self.index[m]] = c
        return v

    def to_poly(self, vec) -> Polynomial:
        field = self.ring.field
        terms = {m: c for m, c in zip(self.monomials, vec) if not field.is_zero(c)}
        return Polynomial(self.ring, terms, _normalized=True)

    def apply_var(self, i: int, vec: list) -> list:
        field = self.ring.field
        out = [field.zero()] * self.dimension
        cols = self.columns[i]
        for j, c in enumerate(vec):
            if field.is_zero(c):
                continue
            for r, a in cols[j].items():
                out[r] = field.add(out[r], field.mul(a, c))
        return out

    def action_matrix(self, g: Polynomial) -> list[list]:
        """Dense matrix (rows) of multiplication by g on the quotient."""
        field = self.ring.field
        rows = [[field.zero()] * self.dimension for _ in range(self.dimension)]
        for j, b in enumerate(self.monomials):
            col = self.nf_coords(g * self.ring.monomial(b))
            for r, c in enumerate(col):
                if not field.is_zero(c):
                    rows[r][j] = c
        return rows

    def var_matrix(self, i: int) -> list[list]:
        field = self.ring.field
        rows = [[field.zero()] * self.dimension for _ in range(self.dimension)]
        for j, col in enumerate(self.columns[i]):
            for r, c in col.items():
                rows[r][j] = c
        return rows

    def multiply(self, u: list, v: list) -> list:
        return self.nf_coords(self.to_poly(u) * self.to_poly(v))

    def element_power(self, vec: list, e: int) -> list:
        field = self.ring.field
        out = self.nf_coords(self.ring.one())
        base = list(vec)
        while e:
            if e & 1:
                out = self.multiply(out, base)
            e >>= 1
            if e:
                base = self.multiply(base, base)
        return out


def quotient_basis(I: Ideal, order=None) -> QuotientBasis:
    return QuotientBasis(I, order)


def _monomials_of_total_degree(n: int, d: int):
    if n == 1:
        yield (d,)
        return
    for e in range(d + 1):
        for rest in _monomials_of_total_degree(n - 1, d - e):
            yield (e,) + rest


def certified_power_bound(Q: QuotientBasis) -> int:
    """Smallest d, certified by direct normal forms, with every total-degree-d
    monomial inside the ideal (so the d-th power of the irrelevant maximal
    ideal is contained in it)."""
    field = Q.ring.field
    n = Q.ring.npres
    start = max((sum(m) for m in Q.monomials), default=0) + 1
    for d in range(start, Q.dimension + 2):
        if all(
            all(field.is_zero(c) for c in Q.nf_monomial(m))
            for m in _monomials_of_total_degree(n, d)
        ):
            return d
    raise GradixError("internal: length bound failed to certify a power of the maximal ideal")


# ---------------------------------------------------------------------------
# socles


@dataclass
class SocleData:
    vectors: list
    polynomials: list
    dimension: int
    homogeneous_flags: list
    degree_histogram: dict

    def __iter__(self):
        return iter(self.polynomials)


def _socle_kernel(Q: QuotientBasis, matrices: list[list[list]]) -> list[list]:
    rows = [row for M in matrices for row in M]
    return kernel_basis(Q.ring.field, rows, Q.dimension)


def _graded_socle_vectors(Q: QuotientBasis) -> list[list]:
    """Kernel of all variable actions, one degree slice at a time."""
    field = Q.ring.field
    slices: dict[int, list[int]] = {}
    for j, d in enumerate(Q.degrees):
        slices.setdefault(d, []).append(j)
    out = []
    for d in sorted(slices):
        idxs = slices[d]
        rows = []
        for i in range(Q.ring.npres):
            targets = sorted({r for j in idxs for r in Q.columns[i][j]})
            for r in targets:
                rows.append([Q.columns[i][j].get(r, field.zero()) for j in idxs])
        for kv in kernel_basis(field, rows, len(idxs)):
            full = [field.zero()] * Q.dimension
            for pos, j in enumerate(idxs):
                full[j] = kv[pos]
            out.append(full)
    return out


def socle(Q: QuotientBasis) -> SocleData:
    """Basis of 0 : (all variables) in R/I; homogeneous by construction
    when the ideal is graded."""
    if Q.ideal.is_graded():
        vectors = _graded_socle_vectors(Q)
    else:
        vectors = _socle_kernel(Q, [Q.var_matrix(i) for i in range(Q.ring.npres)])
    return _make_socle_data(Q, vectors)


def socle_wrt(Q: QuotientBasis, annihilators) -> SocleData:
    """Basis of 0 : (g_1, ..., g_k) in R/I for arbitrary ideal generators."""
    mats = [Q.action_matrix(g) for g in annihilators]
    return _make_socle_data(Q, _socle_kernel(Q, mats))


def _make_socle_data(Q: QuotientBasis, vectors) -> SocleData:
    polys = [Q.to_poly(v) for v in vectors]
    flags = [is_homogeneous(p) for p in polys]
    hist: dict[int, int] = {}
    for p, h in zip(polys, flags):
        if h and not p.is_zero():
            d = Q.ring.weighted_degree(next(iter(p.terms)))
            hist[d] = hist.get(d, 0) + 1
    return SocleData(vectors, polys, len(vectors), flags, hist)


# ---------------------------------------------------------------------------
# radical and maximality certification


@dataclass
class RadicalCertificate:
    maximal: bool
    radical: Ideal
    residue_dimension: int
    irrelevant: bool  # radical equals the ideal of all variables


def minimal_polynomial(Q: QuotientBasis, element) -> list:
    """Monic minimal polynomial (ascending coefficients) of an element of
    the quotient algebra; `element` is a variable index or a coordinate
    vector."""
    field = Q.ring.field
    if isinstance(element, int):
        step = lambda v: Q.apply_var(element, v)
    else:
        elem = list(element)
        step = lambda v: Q.multiply(v, elem)
    # track each power of the element against the span of earlier powers
    aug: list[tuple[list, list]] = []  # (reduced vector, combination over powers)
    power = Q.nf_coords(Q.ring.one())
    k = 0
    while True:
        combo = [field.zero()] * (k + 1)
        combo[k] = field.one()
        vec = list(power)
        for red, cmb in aug:
            pivot = next(i for i, c in enumerate(red) if not field.is_zero(c))
            factor = field.div(vec[pivot], red[pivot])
            if not field.is_zero(factor):
                vec = [field.sub(a, field.mul(factor, b)) for a, b in zip(vec, red)]
                for i, c in enumerate(cmb):
                    combo[i] = field.sub(combo[i], field.mul(factor, c))
        if all(field.is_zero(c) for c in vec):
            # dependency: sum combo_i * element^i = 0, normalized monic
            inv = field.inv(combo[k])
            return [field.mul(c, inv) for c in combo]
        aug.append((vec, combo))
        power = step(power)
        k += 1
        if k > Q.dimension:
            raise GradixError("internal: minimal polynomial search exceeded dimension")


def _univariate_to_poly(ring, coeffs, var_index: int) -> Polynomial:
    field = ring.field
    terms = {}
    for e, c in enumerate(coeffs):
        if field.is_zero(c):
            continue
        m = [0] * ring.npres
        m[var_index] = e
        terms[tuple(m)] = c
    return Polynomial(ring, terms, _normalized=True)


def _frobenius_component_count(A: QuotientBasis) -> int:
    """Number of maximal ideals of a reduced GF(p) algebra: the dimension
    of the fixed space of v -> v^p."""
    field = A.ring.field
    p = field.characteristic
    rows = [[field.zero()] * A.dimension for _ in range(A.dimension)]
    for j in range(A.dimension):
        e = [field.zero()] * A.dimension
        e[j] = field.one()
        img = A.element_power(e, p)
        img[j] = field.sub(img[j], field.one())
        for r, c in enumerate(img):
            rows[r][j] = c
    return len(kernel_basis(field, rows, A.dimension))


def _qq_is_field(A: QuotientBasis, attempts: int = 32) -> bool:
    """Is the reduced QQ-algebra A a field?  Decides via the minimal
    polynomial of a primitive element (variables first, then seeded random
    combinations)."""
    import random

    field = A.ring.field
    d = A.dimension
    candidates: list = list(range(A.ring.npres))
    reducible_seen = False
    for cand in candidates:
        mp = minimal_polynomial(A, cand)
        if len(mp) - 1 == d:
            return qq_irreducible(mp)
        if len(mp) > 2 and not qq_irreducible(mp):
            return False  # a subalgebra already splits
    rng = random.Random(0xA11CE)
    for trial in range(attempts):
        bound = 2 + trial
        coeffs = [field.from_int(rng.randint(-bound, bound)) for _ in range(A.ring.npres)]
        vec = [field.zero()] * d
        for i, c in enumerate(coeffs):
            if field.is_zero(c):
                continue
            col = A.nf_coords(A.ring.monomial(tuple(1 if k == i else 0 for k in range(A.ring.npres))))
            vec = [field.add(a, field.mul(c, b)) for a, b in zip(vec, col)]
        mp = minimal_polynomial(A, vec)
        if len(mp) - 1 == d:
            return qq_irreducible(mp)
        if len(mp) > 2 and not qq_irreducible(mp):
            return False
    raise GradixError("no primitive element found; cannot certify maximality")


def radical_maximal_certify(I: Ideal, order=None) -> RadicalCertificate:
    """Compute the radical of a zero-dimensional ideal (squarefree parts of
    the variables' minimal polynomials, sound over QQ and prime fields) and
    decide whether it is maximal."""
    ring = I.ring
    Q = QuotientBasis(I, order)
    extra = []
    for i in range(ring.npres):
        mp = minimal_polynomial(Q, i)
        sq = squarefree_part(mp, ring.field)
        if len(sq) != len(mp):
            extra.append(_univariate_to_poly(ring, sq, i))
    radical = Ideal(ring, list(I.gens) + extra) if extra else I
    A = QuotientBasis(radical, order)
    d = A.dimension
    if d == 1:
        maximal = True
    elif ring.field.characteristic > 0:
        maximal = _frobenius_component_count(A) == 1
    else:
        maximal = _qq_is_field(A)
    vars_ideal = Ideal(ring, [ring.var(n) for n in ring.names])
    irrelevant = ideal_equal(radical, vars_ideal)
    return RadicalCertificate(maximal, radical, d, irrelevant)


# ---------------------------------------------------------------------------
# derived invariants


def local_socle_dimension(I: Ideal) -> int:
    """Socle dimension over the residue field for a zero-dimensional ideal
    with maximal radical; this is the index of reducibility."""
    cert = radical_maximal_certify(I)
    if not cert.maximal:
        raise RadicalNotMaximal(
            "radical is not maximal; the index of reducibility of general "
            "primary ideals is outside certified scope"
        )
    Q = QuotientBasis(I)
    sd = socle_wrt(Q, cert.radical.gens).dimension
    if sd % cert.residue_dimension:
        raise GradixError("internal: socle dimension not divisible by residue degree")
    return sd // cert.residue_dimension


def type_of_quotient(I: Ideal) -> int:
    """Cohen-Macaulay type of the Artinian quotient R/I: socle dimension
    over the residue field of the (certified maximal) radical."""
    return local_socle_dimension(I)


@dataclass
class GradedSocleRank:
    rank: int
    histogram: dict | None


def graded_socle_rank(arg) -> GradedSocleRank:
    """Rank of the socle over the graded field; accepts an Ideal or a
    QuotientBasis.

    Without invertible variables the graded field is k and the rank is the
    socle dimension, with its degree histogram.  With a Laurent unit the
    quotient is typically not finite-dimensional over k; the rank is then
    computed after dehomogenizing (unit variable set to 1), which
    identifies it with the type of the resulting Artinian local quotient.
    """
    if isinstance(arg, QuotientBasis):
        I, Q = arg.ideal, arg
    else:
        I, Q = arg, None
    if not I.is_graded():
        raise NotGraded("graded socle rank needs a graded ideal")
    ring = I.ring
    if ring.has_laurent:
        dehom = dehomogenize_units(I)
        return GradedSocleRank(local_socle_dimension(dehom), None)
    data = socle(Q if Q is not None else QuotientBasis(I))
    return GradedSocleRank(data.dimension, dict(data.degree_histogram))


def dehomogenize_units(I: Ideal) -> Ideal:
    """Adjoin v - 1 for every invertible variable."""
    ring = I.ring
    extra = [ring.var(n) - ring.one() for n, inv in zip(ring.names, ring.invertible) if inv]
    return Ideal(ring, list(I.gens) + extra)


def hilbert_function(Q: QuotientBasis) -> list[tuple[int, int]]:
    """Dimensions of the graded pieces of R/I, ascending by degree."""
    if not Q.ideal.is_graded():
        raise NotGraded("Hilbert function needs a graded ideal")
    if not Q.ring.positively_graded:
        raise NotPositivelyGraded("Hilbert function needs positive weights")
    hist: dict[int, int] = {}
    for d in Q.degrees:
        hist[d] = hist.get(d, 0) + 1
    return sorted(hist.items())
