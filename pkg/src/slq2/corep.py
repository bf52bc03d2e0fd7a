"""Corepresentations of the quantum SL(2) coordinate algebra.

A corepresentation is a labelled basis plus a square matrix rho of algebra
elements with the coaction convention  v_i -> sum_j rho[i][j] (x) v_j.
Three families are built directly from the coproduct:

  * Y_m  -- the span of the degree-m monomials in a and c,
  * V_m  -- Y_m for m < ell (these are irreducible),
  * W_n  -- the span of degree-n monomials in a^ell and c^ell (the
            classical integer/half-integer spin series pushed forward).

On top of the builders: tensor products, comodule-axiom verification,
irreducibility certificates by linear independence of matrix elements,
intertwiner (hom) spaces, subcomodule/quotient machinery, and a greedy
decomposition driver for ell = 3 that reproduces the known tensor product
tables of the V-series.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Union

from .algebra import (
    AlgebraElement,
    AlgebraMode,
    NormalMonomial,
    monomial_element,
    multiply,
    pbw_coordinates,
    project,
    zero,
)
from .cyclo import CyclotomicScalar
from .hopf import _coproduct_monomial, character, coproduct, counit, evaluate_character
from .linalg import (
    NoSolutionError,
    ScalarMatrix,
    inverse,
    is_invertible,
    kernel,
    rref,
    solve,
)

Vector = list[CyclotomicScalar]


@dataclass
class Corep:
    """A corepresentation: a labelled basis and the coaction matrix rho,
    with the convention  v_i -> sum_j rho[i][j] (x) v_j.  The comodule
    axioms (Delta rho = rho . rho entrywise, eps rho = identity) are
    checkable with ``verify_corep``."""

    mode: AlgebraMode
    dim: int
    basis_labels: list[str]
    rho: list[list[AlgebraElement]]
    family: str = ""

    @property
    def ell(self) -> int:
        return self.mode.ell

    def entry(self, i: int, j: int) -> AlgebraElement:
        return self.rho[i][j]

    def entries_flat(self) -> list[AlgebraElement]:
        return [e for row in self.rho for e in row]

    def weight_values(self) -> Optional[list[CyclotomicScalar]]:
        """Diagonal character weights, when the weight matrix is diagonal.

        Applying the order-one character of the quotient F entrywise gives a
        scalar matrix that any intertwiner must commute with; when it is
        diagonal its values chop hom-space solves into small blocks.
        """
        chi = character(AlgebraMode.quotient_f(self.ell), 1)
        fmode = AlgebraMode.quotient_f(self.ell)
        values: list[CyclotomicScalar] = [None] * self.dim  # type: ignore[list-item]
        for i in range(self.dim):
            for j in range(self.dim):
                val = evaluate_character(chi, project(fmode, self.rho[i][j]))
                if i == j:
                    values[i] = val
                elif not val.is_zero():
                    return None
        return values


@dataclass
class Subspace:
    """A subspace of a corepresentation, given by independent row vectors."""

    ambient: Corep
    basis: list[Vector]

    @property
    def dim(self) -> int:
        return len(self.basis)


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def _corep_from_monomials(mode: AlgebraMode, monos: list[NormalMonomial], family: str) -> Corep:
    """Extract the coaction matrix on the span of the given monomials.

    Requires every second tensor leg of the coproduct of a basis monomial to
    be one of the basis monomials (exact for the Y and W spans)."""
    index = {m: i for i, m in enumerate(monos)}
    dim = len(monos)
    rho = [[zero(mode) for _ in range(dim)] for _ in range(dim)]
    for i, m in enumerate(monos):
        for (m1, m2), c in _coproduct_monomial(mode, m).terms.items():
            j = index.get(m2)
            if j is None:
                raise ValueError(f"coaction of {m.label()} leaves the span (hit {m2.label()})")
            rho[i][j] = rho[i][j] + monomial_element(mode, m1, c)
    return Corep(mode, dim, [m.label() for m in monos], rho, family)


def build_y(m: int, ell: int) -> Corep:
    """Y_m: coaction on the span of a^(m-h) c^h, h = 0..m."""
    if m < 0:
        raise ValueError("m must be >= 0")
    mode = AlgebraMode.generic(ell)
    monos = [NormalMonomial(m - h, 0, h) for h in range(m + 1)]
    return _corep_from_monomials(mode, monos, f"Y{m}")


def build_v(m: int, ell: int) -> Corep:
    """V_m = Y_m for 0 <= m <= ell - 1 (the irreducible fractional series)."""
    if not 0 <= m <= ell - 1:
        raise ValueError(f"V_m requires 0 <= m <= {ell - 1}")
    c = build_y(m, ell)
    c.family = f"V{m}"
    return c


def build_w(n: int, ell: int) -> Corep:
    """W_n: coaction on degree-n monomials in alpha = a^ell, gamma = c^ell."""
    if n < 0:
        raise ValueError("n must be >= 0")
    mode = AlgebraMode.generic(ell)
    monos = [NormalMonomial(ell * (n - i), 0, ell * i) for i in range(n + 1)]
    return _corep_from_monomials(mode, monos, f"W{n}")


def tensor(a: Corep, b: Corep) -> Corep:
    """Tensor product corepresentation, basis ordered first-factor major."""
    if a.mode != b.mode:
        raise ValueError("tensor factors live in different modes")
    dim = a.dim * b.dim
    labels = [f"{la}(x){lb}" for la in a.basis_labels for lb in b.basis_labels]
    rho = [[zero(a.mode) for _ in range(dim)] for _ in range(dim)]
    for i in range(a.dim):
        for r in range(b.dim):
            for j in range(a.dim):
                aij = a.rho[i][j]
                if aij.is_zero():
                    continue
                for s in range(b.dim):
                    brs = b.rho[r][s]
                    if brs.is_zero():
                        continue
                    rho[i * b.dim + r][j * b.dim + s] = multiply(aij, brs)
    name = f"{a.family or '?'}(x){b.family or '?'}"
    return Corep(a.mode, dim, labels, rho, name)


# ---------------------------------------------------------------------------
# verification and certificates
# ---------------------------------------------------------------------------

@dataclass
class CorepReport:
    comultiplicative: bool
    counital: bool
    failures: list[tuple[int, int, str]]

    @property
    def ok(self) -> bool:
        return self.comultiplicative and self.counital


def verify_corep(c: Corep) -> CorepReport:
    """Check Delta(rho_ij) = sum_k rho_ik (x) rho_kj and eps(rho_ij) = delta_ij."""
    from .hopf import TensorElement, tensor_of

    failures = []
    comult = True
    for i in range(c.dim):
        for j in range(c.dim):
            lhs = coproduct(c.rho[i][j])
            rhs = TensorElement(c.mode, 2, {})
            for k in range(c.dim):
                left, right = c.rho[i][k], c.rho[k][j]
                if left.is_zero() or right.is_zero():
                    continue
                rhs = rhs + tensor_of(left, right)
            if lhs != rhs:
                comult = False
                failures.append((i, j, "coproduct"))
    one = CyclotomicScalar.one(c.ell)
    zero_s = CyclotomicScalar.zero(c.ell)
    counital = True
    for i in range(c.dim):
        for j in range(c.dim):
            expected = one if i == j else zero_s
            if counit(c.rho[i][j]) != expected:
                counital = False
                failures.append((i, j, "counit"))
    return CorepReport(comult, counital, failures)


@dataclass
class Certificate:
    independent: bool
    rank: int
    expected: int
    witness: Optional[Vector] = None  # a kernel vector when dependent


def irreducibility_certificate(c: Corep) -> Certificate:
    """Linear independence of the dim^2 matrix elements certifies
    irreducibility; a found relation is reported with a witness but does
    not by itself prove reducibility."""
    matrix, _ = pbw_coordinates(c.entries_flat())
    red, pivots = rref(matrix)
    r = len(pivots)
    expected = c.dim * c.dim
    if r == expected:
        return Certificate(True, r, expected)
    witness = kernel(matrix.transpose())[0] if r < matrix.rows else None
    return Certificate(False, r, expected, witness)


# ---------------------------------------------------------------------------
# intertwiners
# ---------------------------------------------------------------------------

def hom_space(a: Corep, b: Corep) -> list[ScalarMatrix]:
    """Basis of {Z : rho^A Z = Z rho^B}, i.e. comodule maps A -> B written
    on rows (v_i maps to sum_j Z[i][j] w_j).

    The linear system is blocked by character weights when both coreps have
    diagonal weight matrices, which prunes most unknowns for the larger
    solves."""
    if a.mode != b.mode:
        raise ValueError("hom_space of coreps in different modes")
    ell = a.ell
    zero_s = CyclotomicScalar.zero(ell)

    wa = a.weight_values()
    wb = b.weight_values()
    keep: list[tuple[int, int]] = []
    for i in range(a.dim):
        for k in range(b.dim):
            if wa is not None and wb is not None and wa[i] != wb[k]:
                continue
            keep.append((i, k))
    unknown_index = {pair: n for n, pair in enumerate(keep)}
    nunk = len(keep)
    if nunk == 0:
        return []

    rows: list[list[CyclotomicScalar]] = []
    seen: set[tuple] = set()
    for i in range(a.dim):
        for k in range(b.dim):
            # sum_j rho^A[i][j] Z[j][k] - sum_j Z[i][j] rho^B[j][k] = 0
            per_mono: dict[NormalMonomial, dict[int, CyclotomicScalar]] = {}
            for j in range(a.dim):
                idx = unknown_index.get((j, k))
                if idx is None:
                    continue
                for mono, coeff in a.rho[i][j].terms.items():
                    slot = per_mono.setdefault(mono, {})
                    slot[idx] = slot.get(idx, zero_s) + coeff
            for j in range(b.dim):
                idx = unknown_index.get((i, j))
                if idx is None:
                    continue
                for mono, coeff in b.rho[j][k].terms.items():
                    slot = per_mono.setdefault(mono, {})
                    slot[idx] = slot.get(idx, zero_s) - coeff
            for mono, entries in per_mono.items():
                row = [zero_s] * nunk
                nonzero = False
                for idx, coeff in entries.items():
                    row[idx] = coeff
                    nonzero = nonzero or not coeff.is_zero()
                if not nonzero:
                    continue
                key = tuple(row)
                if key in seen:
                    continue
                seen.add(key)
                rows.append(row)

    if not rows:
        solutions = [[CyclotomicScalar.one(ell) if n == m else zero_s for n in range(nunk)] for m in range(nunk)]
    else:
        solutions = kernel(ScalarMatrix.from_rows(ell, rows))

    result = []
    for sol in solutions:
        z = ScalarMatrix.zeros(ell, a.dim, b.dim)
        for (i, k), n in unknown_index.items():
            z.data[i][k] = sol[n]
        result.append(z)
    return result


# ---------------------------------------------------------------------------
# subcomodules and quotients
# ---------------------------------------------------------------------------

def _coaction_rows(c: Corep, vec: Vector) -> list[AlgebraElement]:
    """For v = sum v_i e_i return w_j = sum_i v_i rho[i][j]."""
    out = [zero(c.mode) for _ in range(c.dim)]
    for i, vi in enumerate(vec):
        if vi.is_zero():
            continue
        for j in range(c.dim):
            entry = c.rho[i][j]
            if not entry.is_zero():
                out[j] = out[j] + entry.scale(vi)
    return out


def _restriction_solution(c: Corep, basis: list[Vector]) -> Optional[list[list[AlgebraElement]]]:
    """Solve for the coaction matrix on span(basis); None if it is not a
    subcomodule."""
    k = len(basis)
    p = ScalarMatrix.from_rows(c.ell, basis)
    pt = p.transpose()
    tau = [[zero(c.mode) for _ in range(k)] for _ in range(k)]
    for r in range(k):
        w = _coaction_rows(c, basis[r])
        per_mono: dict[NormalMonomial, Vector] = {}
        for j, el in enumerate(w):
            for mono, coeff in el.terms.items():
                row = per_mono.setdefault(mono, [CyclotomicScalar.zero(c.ell) for _ in range(c.dim)])
                row[j] = row[j] + coeff
        for mono, y in per_mono.items():
            try:
                x = solve(pt, y)
            except NoSolutionError:
                return None
            for rp in range(k):
                if not x[rp].is_zero():
                    tau[r][rp] = tau[r][rp] + monomial_element(c.mode, mono, x[rp])
    return tau


def subcomodule_check(c: Corep, s: Subspace) -> bool:
    """True iff the coaction maps span(s) into A (x) span(s)."""
    return _restriction_solution(c, s.basis) is not None


def restrict_corep(c: Corep, s: Subspace, family: str = "") -> Corep:
    tau = _restriction_solution(c, s.basis)
    if tau is None:
        raise ValueError("not a subcomodule")
    labels = [f"s{r}" for r in range(len(s.basis))]
    return Corep(c.mode, len(s.basis), labels, tau, family or f"{c.family}|sub")


def quotient_corep(c: Corep, s: Subspace, family: str = "") -> Corep:
    """The induced corepresentation on C / span(s)."""
    if not subcomodule_check(c, s):
        raise ValueError("cannot form the quotient by a non-subcomodule")
    p = ScalarMatrix.from_rows(c.ell, s.basis)
    red, pivots = rref(p)
    pivot_set = set(pivots)
    free = [j for j in range(c.dim) if j not in pivot_set]
    if not free:
        raise ValueError("quotient by the whole space")
    # reduction of each basis vector modulo the subspace, in quotient coords
    zero_s = CyclotomicScalar.zero(c.ell)
    reduction = [[zero_s] * len(free) for _ in range(c.dim)]
    free_index = {j: n for n, j in enumerate(free)}
    for j in free:
        reduction[j][free_index[j]] = CyclotomicScalar.one(c.ell)
    for prow, pcol in enumerate(pivots):
        for n, j in enumerate(free):
            reduction[pcol][n] = -red.data[prow][j]
    rho = [[zero(c.mode) for _ in range(len(free))] for _ in range(len(free))]
    for new_i, i in enumerate(free):
        for j in range(c.dim):
            entry = c.rho[i][j]
            if entry.is_zero():
                continue
            for n in range(len(free)):
                coef = reduction[j][n]
                if not coef.is_zero():
                    rho[new_i][n] = rho[new_i][n] + entry.scale(coef)
    labels = [c.basis_labels[j] for j in free]
    return Corep(c.mode, len(free), labels, rho, family or f"{c.family}/sub")


def span_of_basis_indices(c: Corep, indices: Sequence[int]) -> Subspace:
    zero_s = CyclotomicScalar.zero(c.ell)
    one = CyclotomicScalar.one(c.ell)
    basis = []
    for i in indices:
        v = [zero_s] * c.dim
        v[i] = one
        basis.append(v)
    return Subspace(c, basis)


def standard_y_subspace_indices(m: int, ell: int) -> list[int]:
    """Indices h with h mod ell <= m mod ell: the span that carries the
    maximal subcomodule of Y_m when m >= ell."""
    m0 = m % ell
    return [h for h in range(m + 1) if h % ell <= m0]


# ---------------------------------------------------------------------------
# decomposition driver (ell = 3)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Irr:
    """Label W_n (x) V_m of an irreducible; n = 0 gives the V series and
    m = 0 the W series (V0 = W0 is the trivial one)."""

    n: int
    m: int

    @property
    def dim(self) -> int:
        return (self.n + 1) * (self.m + 1)

    @property
    def name(self) -> str:
        if self.n == 0 and self.m == 0:
            return "V0"
        if self.n == 0:
            return f"V{self.m}"
        if self.m == 0:
            return f"W{self.n}"
        return f"W{self.n}*V{self.m}"


@dataclass(frozen=True)
class Leaf:
    irr: Irr

    @property
    def dim(self) -> int:
        return self.irr.dim

    def notation(self) -> str:
        return self.irr.name


@dataclass(frozen=True)
class DirectSum:
    children: tuple

    @property
    def dim(self) -> int:
        return sum(ch.dim for ch in self.children)

    def notation(self) -> str:
        return " (+) ".join(
            ch.notation() if isinstance(ch, Leaf) else f"[{ch.notation()}]" for ch in self.children
        )


@dataclass(frozen=True)
class Extension:
    """sub (/) quotient: the left part is a subcomodule, the right part is a
    comodule only after quotienting it out."""

    sub: object
    quotient: object

    @property
    def dim(self) -> int:
        return self.sub.dim + self.quotient.dim

    def notation(self) -> str:
        parts = []
        node = self
        while isinstance(node, Extension):
            parts.append(node.sub)
            node = node.quotient
        parts.append(node)
        rendered = []
        for p in parts:
            if isinstance(p, Leaf):
                rendered.append(p.notation())
            elif isinstance(p, DirectSum) and all(isinstance(ch, Leaf) for ch in p.children):
                rendered.append("(" + " (+) ".join(ch.notation() for ch in p.children) + ")")
            else:
                rendered.append(f"[{p.notation()}]")
        return " (/) ".join(rendered)


DecompositionTree = Union[Leaf, DirectSum, Extension]


def tree_flag(tree: DecompositionTree) -> list[str]:
    """One composition series read off the tree, bottom (subcomodule) first.
    Children of a direct sum are traversed in the stored canonical order."""
    if isinstance(tree, Leaf):
        return [tree.irr.name]
    if isinstance(tree, Extension):
        return tree_flag(tree.sub) + tree_flag(tree.quotient)
    out: list[str] = []
    for child in tree.children:
        out.extend(tree_flag(child))
    return out


def tree_layers(tree: DecompositionTree) -> list[list[str]]:
    """Socle-style layers of the tree: layer 0 collects the subcomodule
    constituents, later layers the successive quotients.  Direct sums merge
    layerwise, so equivalent trees give equal layers."""
    if isinstance(tree, Leaf):
        return [[tree.irr.name]]
    if isinstance(tree, Extension):
        return tree_layers(tree.sub) + tree_layers(tree.quotient)
    layers: list[list[str]] = []
    for child in tree.children:
        for depth, names in enumerate(tree_layers(child)):
            while len(layers) <= depth:
                layers.append([])
            layers[depth].extend(names)
    return [sorted(layer) for layer in layers]


def _candidates(ell: int, max_dim: int) -> list[Irr]:
    out = []
    for m in range(ell):
        n = 0
        while (n + 1) * (m + 1) <= max_dim:
            out.append(Irr(n, m))
            n += 1
    out.sort(key=lambda irr: (irr.dim, irr.m, irr.n))
    return out


@lru_cache(maxsize=None)
def _irr_corep(irr: Irr, ell: int) -> Corep:
    if irr.n == 0:
        return build_v(irr.m, ell)
    if irr.m == 0:
        return build_w(irr.n, ell)
    c = tensor(build_w(irr.n, ell), build_v(irr.m, ell))
    c.family = irr.name
    return c


def decompose_l3(c: Corep) -> DecompositionTree:
    """Greedy socle-style decomposition at ell = 3.

    Candidate irreducibles W_n (x) V_m are scanned by ascending dimension
    (W grade before V grade at equal dimension).  A candidate that embeds
    and admits a complementary projection is split off as a direct summand;
    an embedding without a complement contributes an extension node and the
    driver recurses on the quotient.
    """
    if c.ell != 3:
        raise ValueError("the automatic decomposition driver supports ell = 3 only")
    return _decompose(c)


def _decompose(c: Corep) -> DecompositionTree:
    ell = c.ell
    for irr in _candidates(ell, c.dim):
        x = _irr_corep(irr, ell)
        into = hom_space(x, c)
        if not into:
            continue
        if irr.dim == c.dim:
            for t in into:
                if is_invertible(t):
                    return Leaf(irr)
        out_of = hom_space(c, x)
        for t in into:
            for p in out_of:
                composite = t * p  # X -> C -> X
                if not is_invertible(composite):
                    continue
                # idempotent intertwiner projecting C onto the image of T
                e = p * inverse(composite) * t
                complement = Subspace(c, kernel(e.transpose()))
                rest = restrict_corep(c, complement)
                branch = _decompose(rest)
                children: list[DecompositionTree] = [Leaf(irr)]
                if isinstance(branch, DirectSum):
                    children.extend(branch.children)
                else:
                    children.append(branch)
                children.sort(key=lambda ch: (ch.dim, ch.notation()))
                return DirectSum(tuple(children))
        # embeds but does not split: extension with the first embedding
        t = into[0]
        image = Subspace(c, [list(row) for row in t.data])
        quotient = quotient_corep(c, image)
        return Extension(Leaf(irr), _decompose(quotient))
    raise ValueError(f"no irreducible constituent found in {c.family} (dim {c.dim})")


def contains_as_subcomodule(irr_corep: Corep, c: Corep) -> bool:
    """A nonzero intertwiner out of an irreducible is injective."""
    return bool(hom_space(irr_corep, c))


def contains_as_quotient(irr_corep: Corep, c: Corep) -> bool:
    return bool(hom_space(c, irr_corep))
