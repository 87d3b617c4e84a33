"""
Collection to normal form and group arithmetic for a pc presentation.

Elements are exponent vectors (e_0, ..., e_{n-1}) standing for g_0^{e_0} ... g_{n-1}^{e_{n-1}}.
Collection runs from the left: a letter g^e entering a normal form moves left past the
non-central generators above g, which come back conjugated by g^e. Conjugates of the
form (g_k^a)^(g^e) are computed once and memoized.
"""
from __future__ import annotations

import random
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence, Union

from pgc.errors import MixedPresentationError
from pgc.logging_config import get_logger
from pgc.presentation import Letter, PcPresentation, Word
from pgc.schemas import FailureReport

logger = get_logger("engine")


class GroupElement:
    """Normal-form element; equality is equality of exponent vectors within one presentation."""

    __slots__ = ("group", "exponents")

    def __init__(self, group: PcGroup, exponents: Sequence[int]):
        self.group = group
        self.exponents: tuple[int, ...] = tuple(exponents)

    def _check(self, other: GroupElement):
        if self.group is not other.group and self.group.fingerprint != other.group.fingerprint:
            raise MixedPresentationError("elements belong to different presentations")

    def __mul__(self, other: GroupElement) -> GroupElement:
        return self.group.multiply(self, other)

    def __pow__(self, k: int) -> GroupElement:
        return self.group.power(self, k)

    def inverse(self) -> GroupElement:
        return self.group.inverse(self)

    def is_identity(self) -> bool:
        return not any(self.exponents)

    def word(self) -> Word:
        return tuple((k, e) for k, e in enumerate(self.exponents) if e)

    def label(self) -> str:
        """Readable normal form such as α4·γ or a^2·c; the identity renders as 1."""
        parts = []
        for k, e in self.word():
            name = self.group.presentation.label(k)
            parts.append(name if e == 1 else f"{name}^{e}")
        return "·".join(parts) if parts else "1"

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.exponents == other.exponents and (
            self.group is other.group or self.group.fingerprint == other.group.fingerprint
        )

    def __hash__(self):
        return hash(self.exponents)

    def __lt__(self, other: GroupElement):
        return self.exponents < other.exponents

    def __repr__(self):
        return f"<{self.label()}>"


class PcGroup:
    """
    The group defined by a pc presentation, with a collector.

    Arithmetic assumes the presentation is consistent; consistency_check() decides that.
    Structure computations cache their results in `cache`.
    """

    def __init__(self, presentation: PcPresentation):
        self.presentation = presentation
        self.p = presentation.p
        self.n = presentation.n
        self.fingerprint = presentation.fingerprint
        self.cache: dict = {}
        self._conj: dict[tuple[int, int, int, int], Word] = {}
        self._power_inverse: dict[int, Word] = {}
        self._central_from = self._central_suffix()
        self.identity = GroupElement(self, (0,) * self.n)
        self.gens = [self.generator(i) for i in range(self.n)]

    def _central_suffix(self) -> int:
        central = [True] * self.n
        for (j, i) in self.presentation.comm_tails:
            central[j] = central[i] = False
        c = self.n
        while c > 0 and central[c - 1]:
            c -= 1
        return c

    @property
    def order(self) -> int:
        return self.p**self.n

    # --- element construction ------------------------------------------------------------

    def element(self, exponents: Sequence[int]) -> GroupElement:
        if len(exponents) != self.n:
            raise ValueError(f"expected {self.n} exponents, got {len(exponents)}")
        return GroupElement(self, tuple(int(e) % self.p for e in exponents))

    def generator(self, i: Union[int, str]) -> GroupElement:
        if isinstance(i, str):
            i = self.presentation.index_of(i)
        exps = [0] * self.n
        exps[i] = 1
        return GroupElement(self, exps)

    def word(self, letters: Iterable[tuple[Union[int, str], int]]) -> GroupElement:
        """Collect a word given by generator indices or labels."""
        resolved = [
            (self.presentation.index_of(g) if isinstance(g, str) else g, e) for g, e in letters
        ]
        return self.collect(resolved)

    def elements(self) -> Iterator[GroupElement]:
        for exps in product(range(self.p), repeat=self.n):
            yield GroupElement(self, exps)

    def random_element(self, rng: random.Random) -> GroupElement:
        return GroupElement(self, tuple(rng.randrange(self.p) for _ in range(self.n)))

    # --- collection ----------------------------------------------------------------------

    def collect(self, word: Iterable[Letter]) -> GroupElement:
        return GroupElement(self, self._collect_into([0] * self.n, list(word)))

    def _expand(self, g: int, e: int) -> list[Letter]:
        """g^e with arbitrary integer e as letters of exponent in (0, p)."""
        q, r = divmod(e, self.p)
        letters = [(g, r)] if r else []
        if q > 0:
            letters.extend(list(self.presentation.power_tails[g]) * q)
        elif q < 0:
            letters.extend(list(self._inverse_power_tail(g)) * (-q))
        return letters

    def _inverse_power_tail(self, g: int) -> Word:
        if g not in self._power_inverse:
            tail = self.collect(self.presentation.power_tails[g])
            self._power_inverse[g] = self.inverse(tail).word()
        return self._power_inverse[g]

    def _collect_into(self, exps: list[int], letters: list[Letter]) -> tuple[int, ...]:
        p = self.p
        c = self._central_from
        power_tails = self.presentation.power_tails
        stack = letters[::-1]
        while stack:
            g, e = stack.pop()
            if not 0 < e < p:
                if e:
                    stack.extend(reversed(self._expand(g, e)))
                continue
            if g >= c:
                s = exps[g] + e
                if s >= p:
                    exps[g] = s - p
                    stack.extend(reversed(power_tails[g]))
                else:
                    exps[g] = s
                continue
            moved = []
            for k in range(g + 1, c):
                if exps[k]:
                    moved.append((k, exps[k]))
                    exps[k] = 0
            s = exps[g] + e
            carry = s >= p
            exps[g] = s - p if carry else s
            for k, a in reversed(moved):
                stack.extend(reversed(self._conj_word(k, a, g, e)))
            if carry:
                stack.extend(reversed(power_tails[g]))
        return tuple(exps)

    def _conj_word(self, k: int, a: int, g: int, e: int) -> Word:
        """Normal word of (g_k^a)^(g^e) for k > g."""
        key = (k, a, g, e)
        cached = self._conj.get(key)
        if cached is not None:
            return cached
        if e == 1:
            base = [(k, 1)] + list(self.presentation.comm_tail(k, g))
            result = self.collect(base * a).word()
        else:
            previous = self._conj_word(k, a, g, e - 1)
            letters = []
            for m, b in previous:
                letters.extend(self._conj_word(m, b, g, 1))
            result = self.collect(letters).word()
        self._conj[key] = result
        return result

    # --- arithmetic ----------------------------------------------------------------------

    def _own(self, *xs: GroupElement):
        for x in xs:
            if x.group is not self and x.group.fingerprint != self.fingerprint:
                raise MixedPresentationError("element belongs to a different presentation")

    def multiply(self, x: GroupElement, y: GroupElement) -> GroupElement:
        self._own(x, y)
        return GroupElement(self, self._collect_into(list(x.exponents), list(y.word())))

    def product(self, xs: Iterable[GroupElement]) -> GroupElement:
        exps = [0] * self.n
        for x in xs:
            self._own(x)
            exps = list(self._collect_into(exps, list(x.word())))
        return GroupElement(self, exps)

    def inverse(self, x: GroupElement) -> GroupElement:
        self._own(x)
        p = self.p
        z = list(x.exponents)
        letters = []
        for k in range(self.n):
            if z[k]:
                letter = (k, p - z[k])
                letters.append(letter)
                z = list(self._collect_into(z, [letter]))
        return self.collect(letters)

    def power(self, x: GroupElement, k: int) -> GroupElement:
        self._own(x)
        if k < 0:
            x, k = self.inverse(x), -k
        result = self.identity
        base = x
        while k:
            if k & 1:
                result = self.multiply(result, base)
            k >>= 1
            if k:
                base = self.multiply(base, base)
        return result

    def commutator(self, x: GroupElement, y: GroupElement) -> GroupElement:
        """[x, y] = x^-1 y^-1 x y, computed as (yx)^-1 (xy)."""
        self._own(x, y)
        return self.multiply(self.inverse(self.multiply(y, x)), self.multiply(x, y))

    def conjugate(self, x: GroupElement, g: GroupElement) -> GroupElement:
        """x^g = g^-1 x g."""
        self._own(x, g)
        return self.multiply(self.multiply(self.inverse(g), x), g)

    def element_order(self, x: GroupElement) -> int:
        order = 1
        while not x.is_identity():
            x = self.power(x, self.p)
            order *= self.p
        return order

    # --- consistency ---------------------------------------------------------------------

    def consistency_check(self) -> Optional[FailureReport]:
        """Run the standard overlaps; None when all agree, else the first failure."""
        pres = self.presentation
        p = self.p
        n = self.n
        labels = [f"g{i + 1}" for i in range(n)]

        def nf(letters) -> tuple[int, ...]:
            return self._collect_into([0] * n, list(letters))

        def t(j, i):
            return list(pres.comm_tail(j, i))

        def power(i):
            return list(pres.power_tails[i])

        for k in range(n):
            for j in range(k):
                for i in range(j):
                    left = nf([(k, 1), (i, 1), (j, 1)] + t(j, i))
                    right = nf([(j, 1), (k, 1)] + t(k, j) + [(i, 1)])
                    if left != right:
                        return self._failure(f"{labels[k]} ({labels[j]} {labels[i]})", [k, j, i], left, right)

        for j in range(n):
            for i in range(j):
                left = nf(power(j) + [(i, 1)])
                right = nf([(j, p - 1), (i, 1), (j, 1)] + t(j, i))
                if left != right:
                    return self._failure(f"{labels[j]}^{p} {labels[i]}", [j, i], left, right)
                left = nf([(j, 1)] + power(i))
                right = nf([(i, 1), (j, 1)] + t(j, i) + [(i, p - 1)])
                if left != right:
                    return self._failure(f"{labels[j]} {labels[i]}^{p}", [j, i], left, right)

        for i in range(n):
            left = nf([(i, 1)] + power(i))
            right = nf(power(i) + [(i, 1)])
            if left != right:
                return self._failure(f"{labels[i]}^{p + 1}", [i], left, right)
        return None

    def _failure(self, overlap: str, gens: list[int], left, right) -> FailureReport:
        report = FailureReport(
            overlap=overlap,
            generators=[g + 1 for g in gens],
            left=list(left),
            right=list(right),
        )
        logger.debug(f"Consistency failure: {report.describe()}")
        return report

    def __repr__(self):
        return f"PcGroup(p={self.p}, n={self.n})"
