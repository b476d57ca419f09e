"""
Finite lattice bimodules (M, D, ι, ▷, ◁).

A monoid M biacts on a finite distributive lattice D by join/meet preserving
maps, with ι: M -> D turning multiplication into the actions. All structure is
held in read-only numpy tables and every law is checked exhaustively.
"""

import logging
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping, Optional, Sequence, Union

import numpy as np

from .enums import BimoduleLaw, VarietasConstants
from .exceptions import CongruenceError, StructureError
from .languages import Alphabet, DiamondTerm, Word, eval_diamond
from .monoid import FiniteMonoid, frozen_array, product_monoid
from .order import (
    Fdl,
    FinitePoset,
    LatticeMorphism,
    downset_lattice,
    extend_free,
    free_cdl,
    product_lattice,
    sublattice,
)

logger = logging.getLogger(__name__)


class LatticeBimodule:
    """
    Lattice bimodule given by full tables.

    `act_left[m, d]` is m ▷ d and `act_right[d, m]` is d ◁ m.
    """

    def __init__(
        self,
        monoid: FiniteMonoid,
        lattice: Fdl,
        iota: Sequence[int],
        act_left: object,
        act_right: object,
    ):
        self.monoid = monoid
        self.lattice = lattice
        self.iota = frozen_array(iota)
        self.act_left = frozen_array(act_left)
        self.act_right = frozen_array(act_right)
        m, d = monoid.size, lattice.size
        expected = {"iota": (m,), "act_left": (m, d), "act_right": (d, m)}
        for name, shape in expected.items():
            table = getattr(self, name)
            if table.shape != shape:
                raise StructureError(f"{name} must have shape {shape}, got {table.shape}", name)
            if table.min() < 0 or table.max() >= d:
                raise StructureError(f"{name} entries must be lattice elements", name)

    def __repr__(self) -> str:
        return f"LatticeBimodule(|M|={self.monoid.size}, |D|={self.lattice.size})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LatticeBimodule):
            return NotImplemented
        return (
            np.array_equal(self.monoid.table, other.monoid.table)
            and self.monoid.identity == other.monoid.identity
            and np.array_equal(self.lattice.leq, other.lattice.leq)
            and np.array_equal(self.iota, other.iota)
            and np.array_equal(self.act_left, other.act_left)
            and np.array_equal(self.act_right, other.act_right)
        )

    __hash__ = None  # type: ignore[assignment]

    @property
    def shape(self) -> tuple[int, int]:
        return self.monoid.size, self.lattice.size

    @classmethod
    def trivial(cls) -> "LatticeBimodule":
        """The bimodule (1, 1)."""
        return cls(FiniteMonoid.trivial(), Fdl.trivial(), [0], [[0]], [[0]])


@dataclass(frozen=True)
class LawViolation:
    law: BimoduleLaw
    witness: tuple[int, ...]
    message: str


@dataclass
class AxiomReport:
    """Outcome of the exhaustive law check of a bimodule."""

    violations: list[LawViolation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def laws(self) -> set[BimoduleLaw]:
        return {v.law for v in self.violations}

    def add(self, law: BimoduleLaw, failures: np.ndarray, message: str) -> None:
        bad = np.argwhere(failures)
        if len(bad):
            witness = tuple(int(x) for x in bad[0])
            self.violations.append(LawViolation(law, witness, f"{message} at {witness}"))


def check_axioms(bimodule: LatticeBimodule) -> AxiomReport:
    """Check every equational law of a lattice bimodule, one witness per violated law."""
    report = AxiomReport()
    monoid, lattice = bimodule.monoid, bimodule.lattice
    for name, witness in monoid.violations():
        law = (
            BimoduleLaw.MONOID_ASSOCIATIVITY
            if name == "associativity"
            else BimoduleLaw.MONOID_IDENTITY
        )
        report.violations.append(LawViolation(law, witness, f"monoid {name} fails at {witness}"))
    for name, witness in lattice.lattice_violations():
        law = (
            BimoduleLaw.LATTICE_DISTRIBUTIVITY
            if name == "distributivity"
            else BimoduleLaw.LATTICE_ORDER
        )
        report.violations.append(LawViolation(law, witness, f"lattice {name} fails at {witness}"))

    t, one = monoid.table, monoid.identity
    J, Mt, bot, top = lattice.join, lattice.meet, lattice.bottom, lattice.top
    L, R, iota = bimodule.act_left, bimodule.act_right, bimodule.iota
    m_idx = np.arange(monoid.size)
    d_idx = np.arange(lattice.size)

    # (m·n) ▷ d = m ▷ (n ▷ d)
    report.add(
        BimoduleLaw.LEFT_BIACTION,
        L[t[:, :, None], d_idx[None, None, :]] != L[m_idx[:, None, None], L[None, :, :]],
        "(m·n) ▷ d ≠ m ▷ (n ▷ d)",
    )
    # d ◁ (m·n) = (d ◁ m) ◁ n
    report.add(
        BimoduleLaw.RIGHT_BIACTION,
        R[d_idx[:, None, None], t[None, :, :]] != R[R[:, :, None], m_idx[None, None, :]],
        "d ◁ (m·n) ≠ (d ◁ m) ◁ n",
    )
    report.add(BimoduleLaw.LEFT_UNIT, L[one, :] != d_idx, "1 ▷ d ≠ d")
    report.add(BimoduleLaw.RIGHT_UNIT, R[:, one] != d_idx, "d ◁ 1 ≠ d")
    # (m ▷ d) ◁ n = m ▷ (d ◁ n)
    report.add(
        BimoduleLaw.COMPATIBILITY,
        R[L[:, :, None], m_idx[None, None, :]] != L[m_idx[:, None, None], R[None, :, :]],
        "(m ▷ d) ◁ n ≠ m ▷ (d ◁ n)",
    )
    report.add(
        BimoduleLaw.LEFT_JOIN,
        L[m_idx[:, None, None], J[None, :, :]] != J[L[:, :, None], L[:, None, :]],
        "m ▷ (d ∨ e) ≠ (m ▷ d) ∨ (m ▷ e)",
    )
    report.add(
        BimoduleLaw.LEFT_MEET,
        L[m_idx[:, None, None], Mt[None, :, :]] != Mt[L[:, :, None], L[:, None, :]],
        "m ▷ (d ∧ e) ≠ (m ▷ d) ∧ (m ▷ e)",
    )
    report.add(BimoduleLaw.LEFT_BOTTOM, L[:, bot] != bot, "m ▷ ⊥ ≠ ⊥")
    report.add(BimoduleLaw.LEFT_TOP, L[:, top] != top, "m ▷ ⊤ ≠ ⊤")
    report.add(
        BimoduleLaw.RIGHT_JOIN,
        R[J[:, :, None], m_idx[None, None, :]] != J[R[:, None, :], R[None, :, :]],
        "(d ∨ e) ◁ m ≠ (d ◁ m) ∨ (e ◁ m)",
    )
    report.add(
        BimoduleLaw.RIGHT_MEET,
        R[Mt[:, :, None], m_idx[None, None, :]] != Mt[R[:, None, :], R[None, :, :]],
        "(d ∧ e) ◁ m ≠ (d ◁ m) ∧ (e ◁ m)",
    )
    report.add(BimoduleLaw.RIGHT_BOTTOM, R[bot, :] != bot, "⊥ ◁ m ≠ ⊥")
    report.add(BimoduleLaw.RIGHT_TOP, R[top, :] != top, "⊤ ◁ m ≠ ⊤")
    report.add(
        BimoduleLaw.LEFT_TRANSLATION,
        L[m_idx[:, None], iota[None, :]] != iota[t],
        "m ▷ ι(n) ≠ ι(m·n)",
    )
    report.add(
        BimoduleLaw.RIGHT_TRANSLATION,
        R[iota[:, None], m_idx[None, :]] != iota[t],
        "ι(m) ◁ n ≠ ι(m·n)",
    )
    if report.violations:
        logger.debug(f"{bimodule!r} violates {sorted(v.law.value for v in report.violations)}")
    return report


@dataclass(frozen=True, eq=False)
class FreeHomSpec:
    """The homomorphism from the free bimodule over Σ fixed by a letter assignment Σ -> M."""

    alphabet: Alphabet
    target: LatticeBimodule
    letter_image: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.letter_image) != len(self.alphabet):
            raise StructureError("One monoid element per letter expected", "letter_image")
        if any(not 0 <= m < self.target.monoid.size for m in self.letter_image):
            raise StructureError("Letter images must be monoid elements", "letter_image")

    @classmethod
    def of(
        cls,
        alphabet: Union[str, Alphabet],
        target: LatticeBimodule,
        mapping: Mapping[str, int],
    ) -> "FreeHomSpec":
        sigma = Alphabet.of(alphabet)
        missing = [c for c in sigma if c not in mapping]
        if missing:
            raise StructureError(f"No monoid element for letters {missing}", "letter_image")
        return cls(sigma, target, tuple(int(mapping[c]) for c in sigma))


def eval_hom(hom: FreeHomSpec, word: Word) -> int:
    """h^⭑(w): the product of the letter images."""
    hom.alphabet.check_word(word)
    return hom.target.monoid.product(hom.letter_image[hom.alphabet.index(c)] for c in word)


def eval_hom_diamond(hom: FreeHomSpec, term: DiamondTerm) -> int:
    """h^⋄(t), the lattice extension of ι ∘ h^⭑."""
    iota = hom.target.iota
    return eval_diamond(term, lambda w: int(iota[eval_hom(hom, w)]), hom.target.lattice)


class BimoduleHom:
    """Homomorphism h = (h^⭑, h^⋄) between lattice bimodules."""

    def __init__(
        self,
        source: LatticeBimodule,
        target: LatticeBimodule,
        star: Sequence[int],
        diamond: Union[LatticeMorphism, Sequence[int]],
    ):
        self.source = source
        self.target = target
        self.star = frozen_array(star)
        if self.star.shape != (source.monoid.size,):
            raise StructureError("star needs one entry per source monoid element", "star")
        if not isinstance(diamond, LatticeMorphism):
            diamond = LatticeMorphism(source.lattice, target.lattice, diamond)
        self.diamond = diamond

    def __repr__(self) -> str:
        return f"BimoduleHom(star={self.star.tolist()}, diamond={self.diamond.mapping.tolist()})"

    def violations(self) -> list[str]:
        s, t = self.source, self.target
        f, g = self.star, self.diamond.mapping
        found = []
        if f.min() < 0 or f.max() >= t.monoid.size:
            return ["star-range"]
        if not s.monoid.is_homomorphism(t.monoid, f):
            found.append("star-monoid")
        found += [f"diamond-{law}" for law in self.diamond.violations()]
        if np.any(g[s.iota] != t.iota[f]):
            found.append("iota-square")
        if np.any(g[s.act_left] != t.act_left[f[:, None], g[None, :]]):
            found.append("left-square")
        if np.any(g[s.act_right] != t.act_right[g[:, None], f[None, :]]):
            found.append("right-square")
        return found

    def is_surjective(self) -> bool:
        return len(set(self.star.tolist())) == self.target.monoid.size and len(
            set(self.diamond.mapping.tolist())
        ) == self.target.lattice.size

    @classmethod
    def identity(cls, bimodule: LatticeBimodule) -> "BimoduleHom":
        m, d = bimodule.shape
        return cls(bimodule, bimodule, np.arange(m), np.arange(d))


def is_homomorphism(hom: BimoduleHom) -> bool:
    return not hom.violations()


def compose_homs(after: BimoduleHom, first: BimoduleHom) -> BimoduleHom:
    """The composite `after ∘ first`."""
    return BimoduleHom(
        first.source, after.target, after.star[first.star], first.diamond.then(after.diamond)
    )


def product(first: LatticeBimodule, second: LatticeBimodule) -> LatticeBimodule:
    """Componentwise product; pairs are numbered a·|second| + b on both sorts."""
    d2 = second.lattice.size
    n_m = first.monoid.size * second.monoid.size
    n_d = first.lattice.size * d2
    iota = (first.iota[:, None] * d2 + second.iota[None, :]).reshape(n_m)
    act_left = (first.act_left[:, None, :, None] * d2 + second.act_left[None, :, None, :]).reshape(
        n_m, n_d
    )
    act_right = (
        first.act_right[:, None, :, None] * d2 + second.act_right[None, :, None, :]
    ).reshape(n_d, n_m)
    return LatticeBimodule(
        product_monoid(first.monoid, second.monoid),
        product_lattice(first.lattice, second.lattice),
        iota,
        act_left,
        act_right,
    )


def projections(
    first: LatticeBimodule, second: LatticeBimodule, joint: Optional[LatticeBimodule] = None
) -> tuple[BimoduleHom, BimoduleHom]:
    """The two product projections out of `product(first, second)`."""
    joint = joint if joint is not None else product(first, second)
    m_idx, d_idx = np.arange(joint.monoid.size), np.arange(joint.lattice.size)
    m2, d2 = second.monoid.size, second.lattice.size
    return (
        BimoduleHom(joint, first, m_idx // m2, d_idx // d2),
        BimoduleHom(joint, second, m_idx % m2, d_idx % d2),
    )


def normalize_labels(labels: Iterable[Hashable]) -> tuple[int, ...]:
    """Renumber class labels by order of first occurrence, i.e. by least member."""
    number: dict[Hashable, int] = {}
    return tuple(number.setdefault(label, len(number)) for label in labels)


@dataclass(frozen=True)
class BimoduleCongruence:
    """A pair of partitions of M and D, each given as normalized class labels."""

    part_m: tuple[int, ...]
    part_d: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "part_m", normalize_labels(self.part_m))
        object.__setattr__(self, "part_d", normalize_labels(self.part_d))

    @classmethod
    def diagonal(cls, bimodule: LatticeBimodule) -> "BimoduleCongruence":
        m, d = bimodule.shape
        return cls(tuple(range(m)), tuple(range(d)))

    @classmethod
    def total(cls, bimodule: LatticeBimodule) -> "BimoduleCongruence":
        m, d = bimodule.shape
        return cls((0,) * m, (0,) * d)

    def is_diagonal(self) -> bool:
        return len(set(self.part_m)) == len(self.part_m) and len(set(self.part_d)) == len(
            self.part_d
        )


def _respects(part: np.ndarray, values: np.ndarray) -> bool:
    """Whether related inputs (same `part` label) have equal rows of `values`."""
    same = part[:, None] == part[None, :]
    differ = (values[:, None, :] != values[None, :, :]).any(axis=2)
    return not bool((same & differ).any())


def refines(fine: Sequence[int], coarse: Sequence[int]) -> bool:
    """Whether the partition `fine` is contained in `coarse`."""
    image: dict[int, int] = {}
    return all(image.setdefault(a, b) == b for a, b in zip(fine, coarse))


def is_lattice_congruence(lattice: Fdl, part_d: Sequence[int]) -> bool:
    pd = np.asarray(part_d)
    return _respects(pd, np.concatenate([pd[lattice.join], pd[lattice.meet]], axis=1))


def is_monoid_congruence(monoid: FiniteMonoid, part_m: Sequence[int]) -> bool:
    pm = np.asarray(part_m)
    return _respects(pm, np.concatenate([pm[monoid.table], pm[monoid.table.T]], axis=1))


def is_congruence(bimodule: LatticeBimodule, congruence: BimoduleCongruence) -> bool:
    """Stability of the pair under every unary operation of the bimodule."""
    m, d = bimodule.shape
    if len(congruence.part_m) != m or len(congruence.part_d) != d:
        raise StructureError(
            f"Partition sizes {len(congruence.part_m)}/{len(congruence.part_d)} "
            f"do not match {m}/{d}",
            "partition",
        )
    pm, pd = np.asarray(congruence.part_m), np.asarray(congruence.part_d)
    L, R = bimodule.act_left, bimodule.act_right
    if not is_lattice_congruence(bimodule.lattice, pd):
        return False
    t = bimodule.monoid.table
    monoid_side = np.concatenate(
        [pm[t], pm[t.T], pd[bimodule.iota][:, None], pd[L], pd[R.T]], axis=1
    )
    lattice_side = np.concatenate([pd[L.T], pd[R]], axis=1)
    return _respects(pm, monoid_side) and _respects(pd, lattice_side)


def _representatives(labels: Sequence[int]) -> list[int]:
    first: dict[int, int] = {}
    for element, label in enumerate(labels):
        first.setdefault(label, element)
    return [first[k] for k in range(len(first))]


def quotient(
    bimodule: LatticeBimodule, congruence: BimoduleCongruence
) -> tuple[LatticeBimodule, BimoduleHom]:
    """The quotient by a congruence and the surjection onto it, classes numbered by least member."""
    if not is_congruence(bimodule, congruence):
        raise CongruenceError(f"Relation is not a congruence of {bimodule!r}")
    pm, pd = np.asarray(congruence.part_m), np.asarray(congruence.part_d)
    reps_m = np.array(_representatives(congruence.part_m))
    reps_d = np.array(_representatives(congruence.part_d))
    lattice = bimodule.lattice
    join = pd[lattice.join[np.ix_(reps_d, reps_d)]]
    meet = pd[lattice.meet[np.ix_(reps_d, reps_d)]]
    k = len(reps_d)
    leq = join == np.arange(k)[None, :]
    labels = [
        frozenset(int(x) for x in np.flatnonzero(pd == c)) for c in range(k)
    ]
    quotient_lattice = Fdl(leq, join, meet, labels=labels, validate=False)
    monoid = FiniteMonoid(
        pm[bimodule.monoid.table[np.ix_(reps_m, reps_m)]], int(pm[bimodule.monoid.identity])
    )
    target = LatticeBimodule(
        monoid,
        quotient_lattice,
        pd[bimodule.iota[reps_m]],
        pd[bimodule.act_left[np.ix_(reps_m, reps_d)]],
        pd[bimodule.act_right[np.ix_(reps_d, reps_m)]],
    )
    return target, BimoduleHom(bimodule, target, pm, pd)


def subbimodule(
    bimodule: LatticeBimodule, elements_m: Iterable[int], elements_d: Iterable[int]
) -> tuple[LatticeBimodule, BimoduleHom]:
    """
    Restriction to a submonoid and a sublattice closed under ι and both actions,
    with the inclusion hom. Elements keep their relative order.
    """
    ms = sorted(set(int(x) for x in elements_m))
    monoid = bimodule.monoid
    if sorted(monoid.generated(ms)) != ms:
        raise StructureError("Monoid elements do not form a submonoid", "elements_m")
    lattice, ds = sublattice(bimodule.lattice, elements_d)
    if ds != sorted(set(int(x) for x in elements_d)):
        raise StructureError("Lattice elements do not form a sublattice", "elements_d")
    pos_m = {x: i for i, x in enumerate(ms)}
    pos_d = {x: i for i, x in enumerate(ds)}
    try:
        iota = [pos_d[int(bimodule.iota[x])] for x in ms]
        act_left = [[pos_d[int(bimodule.act_left[m, d])] for d in ds] for m in ms]
        act_right = [[pos_d[int(bimodule.act_right[d, m])] for m in ms] for d in ds]
    except KeyError as e:
        raise StructureError(f"Lattice part not closed under ι and the actions: {e}", "elements_d")
    table = [[pos_m[int(monoid.table[a, b])] for b in ms] for a in ms]
    sub = LatticeBimodule(
        FiniteMonoid(table, pos_m[monoid.identity]), lattice, iota, act_left, act_right
    )
    return sub, BimoduleHom(sub, bimodule, ms, ds)


def image_factorization(
    hom: Union[BimoduleHom, FreeHomSpec]
) -> tuple[Union[BimoduleHom, FreeHomSpec], BimoduleHom]:
    """
    Factor a hom as a surjection followed by an injection.

    For a BimoduleHom the middle object is the image of both components; for a
    FreeHomSpec it is the submonoid generated by the letter images together
    with the sublattice generated by its ι-image.
    """
    if isinstance(hom, FreeHomSpec):
        target = hom.target
        ms = sorted(target.monoid.generated(hom.letter_image))
        ds = target.lattice.closure(target.iota[ms].tolist())
        middle, injection = subbimodule(target, ms, ds)
        position = {x: i for i, x in enumerate(ms)}
        spec = FreeHomSpec(hom.alphabet, middle, tuple(position[x] for x in hom.letter_image))
        return spec, injection
    ms = sorted(set(hom.star.tolist()))
    ds = sorted(set(hom.diamond.mapping.tolist()))
    middle, injection = subbimodule(hom.target, ms, ds)
    pos_m = {x: i for i, x in enumerate(ms)}
    pos_d = {x: i for i, x in enumerate(ds)}
    surjection = BimoduleHom(
        hom.source,
        middle,
        [pos_m[int(x)] for x in hom.star],
        [pos_d[int(x)] for x in hom.diamond.mapping],
    )
    return surjection, injection


def is_star_generated(bimodule: LatticeBimodule) -> bool:
    """Whether D is generated by ι[M] under joins and meets (⊥ and ⊤ included)."""
    closure = bimodule.lattice.closure(bimodule.iota.tolist())
    return len(closure) == bimodule.lattice.size


def is_star_embedded(bimodule: LatticeBimodule) -> bool:
    return len(set(bimodule.iota.tolist())) == bimodule.monoid.size


def canonical_collapse(bimodule: LatticeBimodule) -> BimoduleCongruence:
    """
    The largest congruence with diagonal lattice part: m ~ m′ iff ι, the left
    action and the right action of m and m′ coincide.
    """
    keys = [
        (
            int(bimodule.iota[m]),
            tuple(bimodule.act_left[m, :].tolist()),
            tuple(bimodule.act_right[:, m].tolist()),
        )
        for m in range(bimodule.monoid.size)
    ]
    return BimoduleCongruence(tuple(keys), tuple(range(bimodule.lattice.size)))


def is_reduced(bimodule: LatticeBimodule) -> bool:
    return canonical_collapse(bimodule).is_diagonal()


def reduce(bimodule: LatticeBimodule) -> tuple[LatticeBimodule, BimoduleHom]:
    """The reduced quotient; its hom is the identity on the lattice sort."""
    reduced, hom = quotient(bimodule, canonical_collapse(bimodule))
    logger.debug(f"Reduced {bimodule!r} to {reduced!r}")
    return reduced, hom


def iota_kernel(bimodule: LatticeBimodule) -> tuple[int, ...]:
    """The relation ι(m) = ι(m′) on M as class labels."""
    return normalize_labels(bimodule.iota.tolist())


def kernel(hom: BimoduleHom) -> BimoduleCongruence:
    return BimoduleCongruence(tuple(hom.star.tolist()), tuple(hom.diamond.mapping.tolist()))


def quotient_le(first: BimoduleHom, second: BimoduleHom) -> bool:
    """For two quotients of one bimodule, first ≤ second iff ker second ⊆ ker first."""
    k1, k2 = kernel(first), kernel(second)
    return refines(k2.part_m, k1.part_m) and refines(k2.part_d, k1.part_d)


def factor_through(first: BimoduleHom, second: BimoduleHom) -> Optional[BimoduleHom]:
    """The hom h with first = h ∘ second, when `second` is surjective and h is well defined."""
    if not second.is_surjective():
        return None
    star: dict[int, int] = {}
    diamond: dict[int, int] = {}
    for x, y in zip(second.star.tolist(), first.star.tolist()):
        if star.setdefault(x, y) != y:
            return None
    for x, y in zip(second.diamond.mapping.tolist(), first.diamond.mapping.tolist()):
        if diamond.setdefault(x, y) != y:
            return None
    m, d = second.target.shape
    hom = BimoduleHom(
        second.target, first.target, [star[i] for i in range(m)], [diamond[i] for i in range(d)]
    )
    return hom if is_homomorphism(hom) else None


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(int(x)), self.find(int(y))
        if rx == ry:
            return False
        self.parent[max(rx, ry)] = min(rx, ry)
        return True

    def labels(self) -> tuple[int, ...]:
        return tuple(self.find(x) for x in range(len(self.parent)))


def generated_congruence(
    bimodule: LatticeBimodule,
    pairs_m: Iterable[tuple[int, int]] = (),
    pairs_d: Iterable[tuple[int, int]] = (),
) -> BimoduleCongruence:
    """Least congruence relating the given pairs."""
    monoid, lattice = bimodule.monoid, bimodule.lattice
    t, L, R = monoid.table, bimodule.act_left, bimodule.act_right
    um, ud = _UnionFind(monoid.size), _UnionFind(lattice.size)
    for x, y in pairs_m:
        um.union(x, y)
    for x, y in pairs_d:
        ud.union(x, y)
    changed = True
    while changed:
        changed = False
        for x in range(monoid.size):
            y = um.find(x)
            if x == y:
                continue
            for m in range(monoid.size):
                changed |= um.union(t[m, x], t[m, y])
                changed |= um.union(t[x, m], t[y, m])
            changed |= ud.union(bimodule.iota[x], bimodule.iota[y])
            for d in range(lattice.size):
                changed |= ud.union(L[x, d], L[y, d])
                changed |= ud.union(R[d, x], R[d, y])
        for x in range(lattice.size):
            y = ud.find(x)
            if x == y:
                continue
            for e in range(lattice.size):
                changed |= ud.union(lattice.join[x, e], lattice.join[y, e])
                changed |= ud.union(lattice.meet[x, e], lattice.meet[y, e])
            for m in range(monoid.size):
                changed |= ud.union(L[m, x], L[m, y])
                changed |= ud.union(R[x, m], R[y, m])
    return BimoduleCongruence(um.labels(), ud.labels())


def recognizer_from_monoid(
    monoid: FiniteMonoid,
    alphabet: Union[str, Alphabet],
    letters: Mapping[str, int],
    max_generators: int = VarietasConstants.MAX_FREE_GENERATORS,
) -> FreeHomSpec:
    """
    The bimodule (M, FCDL(M)) with ι the generator embedding and both actions
    the lattice extensions of translation, together with the letter assignment.
    """
    generators = list(range(monoid.size))
    lattice, embedding = free_cdl(generators, max_generators)
    iota = [embedding[m] for m in generators]
    t = monoid.table
    act_left = [
        extend_free(lattice, generators, lambda x, m=m: embedding[int(t[m, x])], lattice).mapping
        for m in generators
    ]
    act_right = np.stack(
        [
            extend_free(
                lattice, generators, lambda x, m=m: embedding[int(t[x, m])], lattice
            ).mapping
            for m in generators
        ],
        axis=1,
    )
    bimodule = LatticeBimodule(monoid, lattice, iota, act_left, act_right)
    logger.info(f"Free recognizer over a monoid of size {monoid.size}: |D| = {lattice.size}")
    return FreeHomSpec.of(alphabet, bimodule, letters)


def diamond_example() -> LatticeBimodule:
    """
    ℤ/2ℤ acting on the diamond {⊥, 0̄, 1̄, ⊤} by translation, with ι(m) = m̄.

    Lattice elements are 0 = ⊥, 1 = 0̄, 2 = 1̄, 3 = ⊤.
    """
    lattice, _ = downset_lattice(FinitePoset.antichain(2))
    swap = [0, 2, 1, 3]
    act = [[0, 1, 2, 3], swap]
    return LatticeBimodule(
        FiniteMonoid.cyclic_group(2), lattice, [1, 2], act, np.array(act).T
    )
