"""
Power-commutator presentations and the .pcp document format.

A presentation on generators g_0..g_{n-1} (0-based in the API, 1-based in documents) stores
    g_i^p     = power_tails[i]      a normal word in generators of index > i
    [g_j,g_i] = comm_tails[(j, i)]  a normal word in generators of index > j   (j > i)
with [x,y] = x^-1 y^-1 x y. Missing entries are trivial tails.

Document layout (canonical serialization, 1-based indices):

    format_version: 1
    p: 3
    ngens: 3
    labels: [a, b, c]
    powers:
    commutators:
      (2, 1) -> [(3, 1)]
"""
from __future__ import annotations

import hashlib
import re
from typing import Iterable, Mapping, Optional, Sequence

from pgc import FORMAT_VERSION
from pgc.errors import PresentationError, PresentationSyntaxError
from pgc.fp_linear import check_prime

# A word is a sequence of (generator index, integer exponent) letters.
Letter = tuple[int, int]
Word = tuple[Letter, ...]


def _normal_tail(tail: Iterable[Sequence[int]], p: int, what: str) -> Word:
    letters = tuple((int(k), int(e)) for k, e in tail)
    result = []
    for k, e in letters:
        if not 0 <= e < p:
            raise PresentationError(f"{what}: exponent {e} of generator {k} outside [0, {p})")
        if e == 0:
            continue
        if result and k <= result[-1][0]:
            raise PresentationError(f"{what}: tail generators must be strictly increasing")
        result.append((k, e))
    return tuple(result)


class PcPresentation:
    """
    Immutable power-commutator presentation with relative orders all equal to p.

    Construction validates the weight condition; consistency is checked separately
    (see PcGroup.consistency_check).
    """

    __slots__ = ("p", "n", "power_tails", "comm_tails", "labels", "_fingerprint")

    def __init__(
        self,
        p: int,
        n: int,
        power_tails: Optional[Mapping[int, Iterable[Sequence[int]]]] = None,
        comm_tails: Optional[Mapping[tuple[int, int], Iterable[Sequence[int]]]] = None,
        labels: Optional[Sequence[str]] = None,
    ):
        self.p = check_prime(p)
        if n < 0:
            raise PresentationError(f"negative generator count {n}")
        self.n = n

        powers = [()] * n
        for i, tail in (power_tails or {}).items():
            if not 0 <= i < n:
                raise PresentationError(f"power relation for unknown generator {i}")
            word = _normal_tail(tail, p, f"g{i + 1}^p")
            if any(k <= i or k >= n for k, _ in word):
                raise PresentationError(f"g{i + 1}^p: tail references a generator of index <= {i + 1}")
            powers[i] = word
        self.power_tails: tuple[Word, ...] = tuple(powers)

        comms = {}
        for (j, i), tail in (comm_tails or {}).items():
            if not (0 <= i < j < n):
                raise PresentationError(f"commutator relation [g{j + 1}, g{i + 1}] needs j > i within range")
            word = _normal_tail(tail, p, f"[g{j + 1}, g{i + 1}]")
            if any(k <= j or k >= n for k, _ in word):
                raise PresentationError(f"[g{j + 1}, g{i + 1}]: tail references lower generator")
            if word:
                comms[(j, i)] = word
        self.comm_tails: dict[tuple[int, int], Word] = comms

        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise PresentationError(f"{len(labels)} labels for {n} generators")
            if len(set(labels)) != n:
                raise PresentationError("generator labels must be distinct")
        self.labels: Optional[tuple[str, ...]] = labels
        self._fingerprint = None

    def comm_tail(self, j: int, i: int) -> Word:
        return self.comm_tails.get((j, i), ())

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"g{i + 1}"

    def index_of(self, label: str) -> int:
        names = self.labels or tuple(f"g{i + 1}" for i in range(self.n))
        try:
            return names.index(label)
        except ValueError:
            raise PresentationError(f"unknown generator label {label!r}") from None

    @property
    def order(self) -> int:
        return self.p**self.n

    @property
    def fingerprint(self) -> str:
        """Digest of the relations (labels excluded); identifies the group for mixing checks."""
        if self._fingerprint is None:
            body = serialize_presentation(self, include_labels=False)
            self._fingerprint = hashlib.sha256(body.encode("utf-8")).hexdigest()[:16]
        return self._fingerprint

    def with_labels(self, labels: Sequence[str]) -> PcPresentation:
        return PcPresentation(self.p, self.n, dict(enumerate(self.power_tails)), self.comm_tails, labels)

    def __eq__(self, other):
        return (
            isinstance(other, PcPresentation)
            and self.p == other.p
            and self.n == other.n
            and self.power_tails == other.power_tails
            and self.comm_tails == other.comm_tails
        )

    def __hash__(self):
        return hash(self.fingerprint)

    def __repr__(self):
        return f"PcPresentation(p={self.p}, n={self.n}, relations={len(self.comm_tails)})"


def from_relations(
    p: int,
    labels: Sequence[str],
    commutators: Optional[Mapping[tuple[str, str], Sequence[tuple[str, int]]]] = None,
    powers: Optional[Mapping[str, Sequence[tuple[str, int]]]] = None,
) -> PcPresentation:
    """
    Build a presentation from relations written with generator labels.

    Args:
        p: Prime modulus
        labels: Generator names in pc order
        commutators: {(x, y): [(z, e), ...]} meaning [x, y] = Π z^e. Either orientation is accepted;
            a relation [g_i, g_j] with i < j is turned around as the inverse of a single-letter tail.
        powers: {x: [(z, e), ...]} meaning x^p = Π z^e

    Exponents are reduced mod p for generators whose own p-th power is trivial.
    """
    index = {name: i for i, name in enumerate(labels)}
    power_tails = {}
    for name, tail in (powers or {}).items():
        power_tails[index[name]] = [(index[z], e) for z, e in tail]

    def reduce(tail):
        letters = []
        for z, e in tail:
            k = index[z]
            if power_tails.get(k) and not 0 <= e < p:
                raise PresentationError(f"exponent {e} of {z} needs collection: {z}^p is nontrivial")
            letters.append((k, e % p))
        return letters

    for name in list(power_tails):
        power_tails[name] = reduce((labels[k], e) for k, e in power_tails[name])

    comm_tails = {}
    for (x, y), tail in (commutators or {}).items():
        j, i = index[x], index[y]
        if j < i:
            if len(tail) > 1:
                raise PresentationError(f"[{x}, {y}] must be written as [{y}, {x}] for a multi-letter tail")
            j, i = i, j
            tail = [(z, -e) for z, e in tail]
        if (j, i) in comm_tails:
            raise PresentationError(f"duplicate relation for [{labels[j]}, {labels[i]}]")
        comm_tails[(j, i)] = reduce(tail)
    return PcPresentation(p, len(labels), power_tails, comm_tails, labels)


# --- .pcp codec -------------------------------------------------------------------------------

_KEY = re.compile(r"^([a-z_]+)\s*:\s*(.*?)\s*$")
_POWER = re.compile(r"^\s*(-?\d+)\s*->\s*\[(.*)\]\s*$")
_COMM = re.compile(r"^\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*->\s*\[(.*)\]\s*$")
_TAIL = re.compile(r"^\s*(?:\(\s*-?\d+\s*,\s*-?\d+\s*\)\s*(?:,\s*\(\s*-?\d+\s*,\s*-?\d+\s*\)\s*)*)?$")
_PAIR = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")
_LABEL = re.compile(r"^(?:[^\s,\[\]]|\[[^\s\[\]]*\])+$")


def _split_labels(inner: str) -> list[str]:
    # commas inside brackets belong to labels such as [v4,v1]
    names, depth, current = [], 0, []
    for ch in inner:
        if ch == "," and depth == 0:
            names.append("".join(current).strip())
            current = []
            continue
        depth += (ch == "[") - (ch == "]")
        current.append(ch)
    names.append("".join(current).strip())
    return names


def _parse_tail(body: str, line_no: int, column: int) -> list[tuple[int, int]]:
    if not _TAIL.match(body):
        raise PresentationSyntaxError(f"malformed tail [{body}]", line_no, column)
    return [(int(k), int(e)) for k, e in _PAIR.findall(body)]


def _to_engine(tail, n: int, line_no: int, column: int):
    letters = []
    for k, e in tail:
        if not 1 <= k <= n:
            raise PresentationSyntaxError(f"generator index {k} out of range 1..{n}", line_no, column)
        letters.append((k - 1, e))
    return letters


def parse_presentation(text: str) -> PcPresentation:
    """
    Parse a .pcp document into a structurally valid presentation (consistency not checked).

    Raises:
        PresentationSyntaxError: malformed line (with 1-based line and column)
        PresentationError: weight violation, e.g. a tail referencing a lower generator
        FieldError: non-prime modulus
    """
    fields = {}
    powers = []
    comms = []
    section = None
    last_line = 0

    for line_no, raw in enumerate(text.splitlines(), start=1):
        last_line = line_no
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        column = len(line) - len(line.lstrip()) + 1
        indented = line[0].isspace()

        if indented and section == "powers":
            m = _POWER.match(line)
            if not m:
                raise PresentationSyntaxError("expected 'i -> [(k, e), ...]'", line_no, column)
            powers.append((line_no, column, int(m.group(1)), _parse_tail(m.group(2), line_no, m.start(2) + 1)))
            continue
        if indented and section == "commutators":
            m = _COMM.match(line)
            if not m:
                raise PresentationSyntaxError("expected '(j, i) -> [(k, e), ...]'", line_no, column)
            comms.append(
                (line_no, column, int(m.group(1)), int(m.group(2)), _parse_tail(m.group(3), line_no, m.start(3) + 1))
            )
            continue
        if indented:
            raise PresentationSyntaxError("indented entry outside powers/commutators", line_no, column)

        m = _KEY.match(line)
        if not m:
            raise PresentationSyntaxError("expected 'key: value'", line_no, column)
        key, value = m.group(1), m.group(2)
        value_col = m.start(2) + 1
        if key in fields or (key in ("powers", "commutators") and section == key):
            raise PresentationSyntaxError(f"duplicate key {key!r}", line_no, column)
        if key in ("format_version", "p", "ngens"):
            if not re.fullmatch(r"\d+", value):
                raise PresentationSyntaxError(f"{key} must be a non-negative integer", line_no, value_col)
            fields[key] = int(value)
            section = None
        elif key == "labels":
            if not (value.startswith("[") and value.endswith("]")):
                raise PresentationSyntaxError("labels must be a [..] list", line_no, value_col)
            inner = value[1:-1].strip()
            names = _split_labels(inner) if inner else []
            if any(not _LABEL.match(x) for x in names):
                raise PresentationSyntaxError("empty or malformed label", line_no, value_col)
            fields[key] = names
            section = None
        elif key in ("powers", "commutators"):
            if value:
                raise PresentationSyntaxError(f"{key} entries go on indented lines", line_no, value_col)
            fields[key] = True
            section = key
        else:
            raise PresentationSyntaxError(f"unknown key {key!r}", line_no, column)

    for required in ("p", "ngens"):
        if required not in fields:
            raise PresentationSyntaxError(f"missing required key {required!r}", last_line + 1, 1)
    version = fields.get("format_version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise PresentationSyntaxError(f"unsupported format_version {version}", 1, 1)

    p = check_prime(fields["p"])
    n = fields["ngens"]
    power_tails = {}
    for line_no, column, i, tail in powers:
        if not 1 <= i <= n:
            raise PresentationSyntaxError(f"generator index {i} out of range 1..{n}", line_no, column)
        if i - 1 in power_tails:
            raise PresentationSyntaxError(f"duplicate power relation for g{i}", line_no, column)
        power_tails[i - 1] = _to_engine(tail, n, line_no, column)
    comm_tails = {}
    for line_no, column, j, i, tail in comms:
        if not (1 <= j <= n and 1 <= i <= n):
            raise PresentationSyntaxError(f"generator pair ({j}, {i}) out of range 1..{n}", line_no, column)
        if j <= i:
            raise PresentationError(f"line {line_no}: commutator entries need j > i, got ({j}, {i})")
        if (j - 1, i - 1) in comm_tails:
            raise PresentationSyntaxError(f"duplicate relation ({j}, {i})", line_no, column)
        comm_tails[(j - 1, i - 1)] = _to_engine(tail, n, line_no, column)
    return PcPresentation(p, n, power_tails, comm_tails, fields.get("labels"))


def _format_tail(word: Word) -> str:
    return "[" + ", ".join(f"({k + 1}, {e})" for k, e in word) + "]"


def serialize_presentation(pres: PcPresentation, include_labels: bool = True) -> str:
    lines = [
        f"format_version: {FORMAT_VERSION}",
        f"p: {pres.p}",
        f"ngens: {pres.n}",
    ]
    if include_labels and pres.labels:
        lines.append("labels: [" + ", ".join(pres.labels) + "]")
    lines.append("powers:")
    for i, tail in enumerate(pres.power_tails):
        if tail:
            lines.append(f"  {i + 1} -> {_format_tail(tail)}")
    lines.append("commutators:")
    for (j, i) in sorted(pres.comm_tails):
        lines.append(f"  ({j + 1}, {i + 1}) -> {_format_tail(pres.comm_tails[(j, i)])}")
    return "\n".join(lines) + "\n"
