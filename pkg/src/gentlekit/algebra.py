"""Exact arithmetic in the completed gentle algebra over R = k[[c]], modulo c^N.

Elements are sparse maps ``(basis index, c-degree) -> Fraction``.  The
R-basis consists of the vertex idempotents, the proper prefixes of the
admissible cycles, and one full cycle per positively signed arrow.  Every
nonzero path of the algebra is a prefix of a sigma-chain, so basis products
reduce to a single path that is rewritten by stripping off full cycles
(each worth one factor of c).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .combinatorics import admissible_path
from .presentation import GentlePresentation, require_strict

PLUS, MINUS = 1, -1


@dataclass(frozen=True, order=True)
class Idempotent:
    vertex: str

    def __str__(self):
        return f"e{self.vertex}"


@dataclass(frozen=True, order=True)
class Path:
    """The length-``length`` non-relation path whose first arrow is ``arrow``."""

    arrow: str
    length: int

    def __str__(self):
        return f"{self.arrow}_{self.length}"


@dataclass(frozen=True, order=True)
class FullCycle:
    arrow: str

    def __str__(self):
        return f"c[{self.arrow}]"


BasisItem = Idempotent | Path | FullCycle


# ------------------------------------------------------------------- signs


@dataclass(frozen=True)
class SignAssignment:
    eps: Mapping[str, int]

    def __getitem__(self, a: str) -> int:
        return self.eps[a]

    @property
    def positive(self) -> tuple[str, ...]:
        return tuple(a for a, e in self.eps.items() if e == PLUS)

    def flipped(self, gp: GentlePresentation) -> SignAssignment:
        """The other valid choice: swap signs at every two-regular vertex."""
        return SignAssignment(
            {a: (-e if gp.is_two_regular(gp.s(a)) else e) for a, e in self.eps.items()}
        )


def sign_problems(gp: GentlePresentation, eps: Mapping[str, int]) -> list[str]:
    problems = []
    if set(eps) != set(gp.arrows):
        problems.append("signs must be given for exactly the arrows of the quiver")
        return problems
    for a in gp.arrows:
        if eps[a] not in (PLUS, MINUS):
            problems.append(f"sign of {a} is not +1 or -1")
        if gp.is_transition(gp.s(a)) and eps[a] != MINUS:
            problems.append(f"{a} starts at transition vertex {gp.s(a)} but has sign +1")
    for v in gp.vertices:
        outs = gp.quiver.out_arrows(v)
        if len(outs) == 2 and eps[outs[0]] == eps[outs[1]]:
            problems.append(f"arrows {outs[0]}, {outs[1]} from vertex {v} share a sign")
    return problems


def check_signs(gp: GentlePresentation, eps: Mapping[str, int]) -> SignAssignment:
    problems = sign_problems(gp, eps)
    if problems:
        raise ValueError("; ".join(problems))
    return SignAssignment(dict(eps))


def assign_signs(gp: GentlePresentation) -> SignAssignment:
    """First-declared outgoing arrow at a two-regular vertex gets +1, all others -1."""
    require_strict(gp)
    eps = {}
    for a in gp.arrows:
        v = gp.s(a)
        first = gp.quiver.out_arrows(v)[0]
        eps[a] = PLUS if gp.is_two_regular(v) and a == first else MINUS
    return SignAssignment(eps)


# ----------------------------------------------------------------- algebra

Terms = dict  # (basis index, degree) -> Fraction


def _add_into(acc: Terms, key, value) -> None:
    v = acc.get(key, 0) + value
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


class TruncatedAlgebra:
    """The completed algebra tensored with R/(c^N), on its standard basis."""

    def __init__(self, gp: GentlePresentation, eps: SignAssignment, N: int = 4):
        if N < 2:
            raise ValueError("truncation order must be at least 2")
        require_strict(gp)
        check_signs(gp, eps.eps)
        self.gp = gp
        self.eps = eps
        self.N = N

        self._cycle: dict[str, tuple[str, ...]] = {}
        for a in gp.arrows:
            self._cycle[a] = admissible_path(gp, a).arrows
        self.ell = {a: len(c) for a, c in self._cycle.items()}

        basis: list[BasisItem] = [Idempotent(v) for v in gp.vertices]
        for a in gp.arrows:
            basis.extend(Path(a, n) for n in range(1, self.ell[a]))
        basis.extend(FullCycle(b) for b in gp.arrows if eps[b] == PLUS)
        self.basis: tuple[BasisItem, ...] = tuple(basis)
        self.index = {b: i for i, b in enumerate(self.basis)}

        self._partner = {}
        for v in gp.vertices:
            outs = gp.quiver.out_arrows(v)
            if gp.is_two_regular(v):
                pos = [b for b in outs if eps[b] == PLUS][0]
                for b in outs:
                    self._partner[b] = pos
        self._table: dict[tuple[int, int], list[tuple[int, int, Fraction]]] = {}

    def __len__(self) -> int:
        return len(self.basis)

    # -- paths ---------------------------------------------------------

    def sigma_power(self, a: str, n: int) -> str:
        cyc = self._cycle[a]
        return cyc[n % len(cyc)]

    def path_of(self, item: BasisItem):
        """A basis item as a path: ``('e', v)`` or ``(first arrow, length)``."""
        if isinstance(item, Idempotent):
            return ("e", item.vertex)
        if isinstance(item, Path):
            return (item.arrow, item.length)
        return (item.arrow, self.ell[item.arrow])

    def _path_source(self, p):
        return p[1] if p[0] == "e" else self.gp.s(p[0])

    def _path_target(self, p):
        if p[0] == "e":
            return p[1]
        return self.gp.t(self.sigma_power(p[0], p[1] - 1))

    def path_product(self, q, p):
        """``q . p`` (traverse p, then q) for paths; None when zero."""
        if p[0] == "e":
            return q if self._path_source(q) == p[1] else None
        if q[0] == "e":
            return p if self._path_target(p) == q[1] else None
        alpha, m = p
        if q[0] != self.sigma_power(alpha, m):
            return None
        return (alpha, m + q[1])

    def cycle_element(self, a: str) -> list[tuple[int, int, Fraction]]:
        """Basis expansion of the full admissible cycle starting with ``a``."""
        if self.eps[a] == PLUS:
            return [(self.index[FullCycle(a)], 0, Fraction(1))]
        v = self.gp.s(a)
        e = self.index[Idempotent(v)]
        if a in self._partner:
            return [(e, 1, Fraction(1)), (self.index[FullCycle(self._partner[a])], 0, Fraction(-1))]
        return [(e, 1, Fraction(1))]

    def reduce_path(self, p) -> list[tuple[int, int, Fraction]]:
        if p[0] == "e":
            return [(self.index[Idempotent(p[1])], 0, Fraction(1))]
        alpha, m = p
        k, r = divmod(m, self.ell[alpha])
        if r:
            return [(self.index[Path(alpha, r)], k, Fraction(1))]
        return [(i, d + k - 1, c) for i, d, c in self.cycle_element(alpha)]

    def basis_product(self, i: int, j: int) -> list[tuple[int, int, Fraction]]:
        """``basis[i] * basis[j]``, untruncated."""
        key = (i, j)
        hit = self._table.get(key)
        if hit is None:
            p = self.path_product(self.path_of(self.basis[i]), self.path_of(self.basis[j]))
            hit = [] if p is None else self.reduce_path(p)
            self._table[key] = hit
        return hit

    # -- elements ------------------------------------------------------

    def element(self, spec: Mapping | BasisItem | None = None) -> AlgebraElement:
        """Build an element from a basis item or ``{item or (item, degree): coeff}``."""
        terms: Terms = {}
        if spec is None:
            return AlgebraElement(self, terms)
        if not isinstance(spec, Mapping):
            spec = {spec: 1}
        for key, coeff in spec.items():
            item, deg = key if isinstance(key, tuple) else (key, 0)
            if deg < self.N:
                _add_into(terms, (self.index[item], deg), Fraction(coeff))
        return AlgebraElement(self, terms)

    def basis_element(self, i: int) -> AlgebraElement:
        return AlgebraElement(self, {(i, 0): Fraction(1)})

    def one(self) -> AlgebraElement:
        return self.element({Idempotent(v): 1 for v in self.gp.vertices})

    def c(self) -> AlgebraElement:
        """The central element c, i.e. the sum of all admissible cycles."""
        return self.element({(Idempotent(v), 1): 1 for v in self.gp.vertices})

    def arrow(self, a: str) -> AlgebraElement:
        terms: Terms = {}
        for i, d, c in self.reduce_path((a, 1)):
            if d < self.N:
                _add_into(terms, (i, d), c)
        return AlgebraElement(self, terms)

    def multiply(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        if x.algebra is not self or y.algebra is not self:
            raise ValueError("elements belong to different algebras")
        out: Terms = {}
        N = self.N
        for (i, di), ci in x.terms.items():
            for (j, dj), cj in y.terms.items():
                if di + dj >= N:
                    continue
                for k, dk, ck in self.basis_product(i, j):
                    d = di + dj + dk
                    if d < N:
                        _add_into(out, (k, d), ci * cj * ck)
        return AlgebraElement(self, out)

    # -- twist ---------------------------------------------------------

    def nu_sign(self, i: int) -> int:
        item = self.basis[i]
        if isinstance(item, Path):
            return self.eps[self.sigma_power(item.arrow, item.length)] * self.eps[item.arrow]
        return 1

    def nu(self, x: AlgebraElement) -> AlgebraElement:
        return AlgebraElement(
            self, {(i, d): c * self.nu_sign(i) for (i, d), c in x.terms.items()}
        )

    # -- dual side -----------------------------------------------------

    def dual(self, item: BasisItem, coeff=1) -> OmegaElement:
        return OmegaElement(self, {(self.index[item], 0): Fraction(coeff)})

    def left_act(self, a: AlgebraElement, phi: OmegaElement) -> OmegaElement:
        """``(a . phi)(x) = phi(x a)``."""
        return OmegaElement(
            self, self._pair_all(lambda b: self.multiply(b, a), phi)
        )

    def right_act(self, phi: OmegaElement, a: AlgebraElement) -> OmegaElement:
        """``(phi . a)(x) = phi(a x)``."""
        return OmegaElement(
            self, self._pair_all(lambda b: self.multiply(a, b), phi)
        )

    def _pair_all(self, fn, phi: OmegaElement) -> Terms:
        out: Terms = {}
        for i in range(len(self.basis)):
            for d, c in phi.evaluate(fn(self.basis_element(i))).items():
                _add_into(out, (i, d), c)
        return out


class AlgebraElement:
    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: TruncatedAlgebra, terms: Terms):
        self.algebra = algebra
        self.terms = terms

    def __mul__(self, other: AlgebraElement) -> AlgebraElement:
        return self.algebra.multiply(self, other)

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        out = dict(self.terms)
        for k, v in other.terms.items():
            _add_into(out, k, v)
        return AlgebraElement(self.algebra, out)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.algebra, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def scale(self, coeff, degree: int = 0) -> AlgebraElement:
        N = self.algebra.N
        return AlgebraElement(
            self.algebra,
            {(i, d + degree): c * coeff for (i, d), c in self.terms.items() if d + degree < N and c * coeff},
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coefficient(self, item: BasisItem) -> dict[int, Fraction]:
        i = self.algebra.index[item]
        return {d: c for (j, d), c in self.terms.items() if j == i}

    def truncated(self, N: int) -> dict:
        return {k: v for k, v in self.terms.items() if k[1] < N}

    def __repr__(self) -> str:
        return _format(self.algebra, self.terms, str)


class OmegaElement:
    """An R-linear functional, stored on the dual basis."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: TruncatedAlgebra, terms: Terms):
        self.algebra = algebra
        self.terms = terms

    def value(self, i: int) -> dict[int, Fraction]:
        return {d: c for (j, d), c in self.terms.items() if j == i}

    def evaluate(self, x: AlgebraElement) -> dict[int, Fraction]:
        """``phi(x)`` as a truncated series ``{degree: coeff}``."""
        N = self.algebra.N
        out: dict[int, Fraction] = {}
        for (i, di), ci in x.terms.items():
            for (j, dj), cj in self.terms.items():
                if i == j and di + dj < N:
                    _add_into(out, di + dj, ci * cj)
        return out

    def __add__(self, other: OmegaElement) -> OmegaElement:
        out = dict(self.terms)
        for k, v in other.terms.items():
            _add_into(out, k, v)
        return OmegaElement(self.algebra, out)

    def __neg__(self) -> OmegaElement:
        return OmegaElement(self.algebra, {k: -v for k, v in self.terms.items()})

    def scale(self, coeff, degree: int = 0) -> OmegaElement:
        N = self.algebra.N
        return OmegaElement(
            self.algebra,
            {(i, d + degree): c * coeff for (i, d), c in self.terms.items() if d + degree < N and c * coeff},
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, OmegaElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def truncated(self, N: int) -> dict:
        return {k: v for k, v in self.terms.items() if k[1] < N}

    def __repr__(self) -> str:
        return _format(self.algebra, self.terms, lambda b: f"{b}*")


def _format(alg: TruncatedAlgebra, terms: Terms, name) -> str:
    if not terms:
        return "0"
    parts = []
    for (i, d), c in sorted(terms.items()):
        cpow = "" if d == 0 else ("c" if d == 1 else f"c^{d}")
        coeff = "" if c == 1 else ("-" if c == -1 else str(c))
        parts.append(f"{coeff}{cpow}{'*' if cpow else ''}{name(alg.basis[i])}")
    return " + ".join(parts).replace("+ -", "- ")


def build_algebra(gp: GentlePresentation, eps: SignAssignment | None = None, N: int = 4) -> TruncatedAlgebra:
    return TruncatedAlgebra(gp, eps if eps is not None else assign_signs(gp), N)


def nu(gp: GentlePresentation, eps: SignAssignment, x: AlgebraElement) -> AlgebraElement:
    if x.algebra.gp != gp or dict(x.algebra.eps.eps) != dict(eps.eps):
        raise ValueError("element belongs to a different algebra")
    return x.algebra.nu(x)


def basis_rank(gp: GentlePresentation, eps: SignAssignment) -> int:
    """|Q0| + sum over arrows of (l_a - 1) + |Q1+|."""
    ell = {a: admissible_path(gp, a).length for a in gp.arrows}
    return len(gp.vertices) + sum(l - 1 for l in ell.values()) + len(eps.positive)


# ----------------------------------------------------------------- theta


@dataclass(frozen=True)
class ThetaFailure:
    check: str
    generator: str
    element: str
    witness: str

    def __str__(self):
        return f"{self.check}: generator {self.generator}, element {self.element}, differs at {self.witness}"


@dataclass(frozen=True)
class ThetaReport:
    N: int
    generators: tuple[str, ...]
    checks: dict  # check name -> number of identities tested
    failures: tuple[ThetaFailure, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def per_generator(self) -> dict[str, bool]:
        bad = {f.generator for f in self.failures}
        return {g: g not in bad for g in self.generators}


class Theta:
    """The isomorphism from the twisted bimodule A°_nu onto Hom_R(A, R).

    Works one c-degree above the requested order so that the division by c
    needed on transition summands loses no information below c^N.
    """

    def __init__(self, gp: GentlePresentation, eps: SignAssignment | None = None, N: int = 4):
        self.N = N
        self.alg = build_algebra(gp, eps, N + 1)
        alg = self.alg
        self.gp = gp
        self.regular = [v for v in gp.vertices if gp.is_two_regular(v)]
        self.transition = [v for v in gp.vertices if gp.is_transition(v)]
        self.beta = {v: [b for b in gp.quiver.out_arrows(v) if alg.eps[b] == PLUS][0] for v in self.regular}
        self.gamma = {j: gp.quiver.out_arrows(j)[0] for j in self.transition}

        # generator label -> (element, image)
        self.generators: dict[str, tuple[AlgebraElement, OmegaElement]] = {}
        for i in self.regular:
            self.generators[f"e{i}"] = (alg.element(Idempotent(i)), alg.dual(FullCycle(self.beta[i])))
        for j in self.transition:
            g = self.gamma[j]
            self.generators[g] = (alg.arrow(g), -alg.dual(self._cycle_minus_first(g)))

    def _cycle_minus_first(self, a: str) -> BasisItem:
        """The cycle starting with ``a`` with its first arrow deleted."""
        l = self.alg.ell[a]
        if l == 1:
            return Idempotent(self.gp.t(a))
        return Path(self.alg.sigma_power(a, 1), l - 1)

    def _tail(self, item: Path) -> AlgebraElement:
        """``q`` with ``q . a = item`` for item = Path(a, n)."""
        if item.length == 1:
            return self.alg.element(Idempotent(self.gp.t(item.arrow)))
        return self.alg.element(Path(self.alg.sigma_power(item.arrow, 1), item.length - 1))

    def __call__(self, x: AlgebraElement) -> OmegaElement:
        """Image of an element of A° (given as an element of A)."""
        alg = self.alg
        out = OmegaElement(alg, {})
        for i in self.regular:
            xi = alg.multiply(x, alg.element(Idempotent(i)))
            if xi.terms:
                out = out + alg.left_act(xi, self.generators[f"e{i}"][1])
        for j in self.transition:
            g = self.gamma[j]
            xj = alg.multiply(x, alg.element(Idempotent(j)))
            if not xj.terms:
                continue
            coeff = AlgebraElement(alg, {})
            e_idx = alg.index[Idempotent(j)]
            for (k, d), c in xj.terms.items():
                item = alg.basis[k]
                if k == e_idx:
                    if d == 0:
                        raise ValueError(f"element has an e{j} component outside the radical")
                    base = alg.element(self._cycle_minus_first(g))
                    coeff = coeff + base.scale(c, d - 1)
                else:
                    coeff = coeff + self._tail(item).scale(c, d)
            out = out + alg.left_act(coeff, self.generators[g][1])
        return out

    def psi(self, phi: OmegaElement) -> AlgebraElement:
        """The explicit inverse, applied R-linearly on the dual basis."""
        alg = self.alg
        out = AlgebraElement(alg, {})
        for (k, d), c in phi.terms.items():
            out = out + self._psi_dual(alg.basis[k]).scale(c, d)
        return out

    def _psi_dual(self, item: BasisItem) -> AlgebraElement:
        alg = self.alg
        if isinstance(item, Idempotent):
            v = item.vertex
            if v in self.beta:
                return alg.element(FullCycle(self.beta[v])) - alg.element({(Idempotent(v), 1): 1})
            return -alg.element({(Idempotent(v), 1): 1})
        if isinstance(item, FullCycle):
            return alg.element(Idempotent(self.gp.s(item.arrow)))
        a, n = item.arrow, item.length
        start = alg.sigma_power(a, n)
        sign = alg.eps[start]
        return alg.element({Path(start, alg.ell[a] - n): sign})

    def submodule_basis(self) -> list[tuple[str, AlgebraElement]]:
        """R-basis of A°: the standard basis with e_j replaced by c e_j at transition j."""
        alg = self.alg
        out = []
        for item in alg.basis:
            if isinstance(item, Idempotent) and item.vertex in self.gamma:
                out.append((f"c*{item}", alg.element({(item, 1): 1})))
            else:
                out.append((str(item), alg.element(item)))
        return out


def _differs(a: dict, b: dict) -> tuple | None:
    for key in sorted(set(a) | set(b)):
        if a.get(key, 0) != b.get(key, 0):
            return key
    return None


def verify_theta(gp: GentlePresentation, eps: SignAssignment | None = None, N: int = 4) -> ThetaReport:
    """Check that theta is A-bilinear and inverse to psi, modulo c^N."""
    if N < 2:
        raise ValueError("truncation order must be at least 2")
    th = Theta(gp, eps, N)
    alg = th.alg
    failures: list[ThetaFailure] = []
    counts = {"right-linear": 0, "left-linear": 0, "psi-theta": 0, "theta-psi": 0}

    def compare(check, gen, elem, lhs, rhs):
        counts[check] += 1
        key = _differs(lhs.truncated(N), rhs.truncated(N))
        if key is not None:
            i, d = key
            failures.append(ThetaFailure(check, gen, elem, f"{alg.basis[i]} (c^{d})"))

    basis_elems = [(str(b), alg.element(b)) for b in alg.basis]
    for label, (g, image) in th.generators.items():
        for name, p in basis_elems:
            compare("right-linear", label, name, th(g * alg.nu(p)), alg.right_act(image, p))
            compare("left-linear", label, name, th(p * g), alg.left_act(p, image))

    for name, x in th.submodule_basis():
        compare("psi-theta", name, name, th.psi(th(x)), x)
    for item in alg.basis:
        phi = alg.dual(item)
        compare("theta-psi", f"{item}*", f"{item}*", th(th.psi(phi)), phi)

    return ThetaReport(N, tuple(th.generators), counts, tuple(failures))
