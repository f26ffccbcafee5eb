"""Trace data model and the line-oriented `.trace` file format.

Format (UTF-8 text, byte-stable):

    #trace v1 program=<id> variant=<id> label=<has_crypto>,<type>,<algo> meta=<k=v;...>
    <seq> <site> <mnemonic> <category>

One event per line, single spaces, decimal integers, lowercase mnemonics,
uppercase categories, no trailing whitespace.
"""

from __future__ import annotations

import io
import re
from dataclasses import dataclass, field
from typing import BinaryIO, Iterable, NamedTuple

from .errors import EmptyTrace, FormatError, ParseError, UnknownMnemonic
from .taxonomy import Category, MNEMONIC_CATEGORY, categorize

CRYPTO_TYPES = ("ENCRYPTION", "HASHING", "NONE")
ALGORITHMS = ("AES", "RC4", "RSA", "SHA1", "MD5", "DES3", "NONE")
ENCRYPTION_ALGOS = frozenset({"AES", "RC4", "RSA", "DES3"})
HASHING_ALGOS = frozenset({"SHA1", "MD5"})

_MNEMONIC_RE = re.compile(r"[a-z0-9_]+\Z")
_META_TOKEN_RE = re.compile(r"[A-Za-z0-9_.+-]*\Z")


@dataclass(frozen=True)
class LabelTriple:
    """Three-level ground truth: crypto presence, crypto type, algorithm."""

    has_crypto: bool
    crypto_type: str
    algorithm: str

    def __post_init__(self):
        if self.crypto_type not in CRYPTO_TYPES:
            raise ValueError(f"bad crypto_type: {self.crypto_type!r}")
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"bad algorithm: {self.algorithm!r}")
        if self.has_crypto != (self.crypto_type != "NONE"):
            raise ValueError("has_crypto inconsistent with crypto_type")
        if self.has_crypto != (self.algorithm != "NONE"):
            raise ValueError("has_crypto inconsistent with algorithm")
        if self.crypto_type == "HASHING" and self.algorithm not in HASHING_ALGOS:
            raise ValueError(f"{self.algorithm} is not a hashing algorithm")
        if self.crypto_type == "ENCRYPTION" and self.algorithm not in ENCRYPTION_ALGOS:
            raise ValueError(f"{self.algorithm} is not an encryption algorithm")

    @classmethod
    def none(cls) -> "LabelTriple":
        return cls(False, "NONE", "NONE")

    @classmethod
    def for_algorithm(cls, algorithm: str) -> "LabelTriple":
        if algorithm in HASHING_ALGOS:
            return cls(True, "HASHING", algorithm)
        if algorithm in ENCRYPTION_ALGOS:
            return cls(True, "ENCRYPTION", algorithm)
        raise ValueError(f"unknown algorithm: {algorithm!r}")

    def to_dict(self) -> dict:
        return {
            "has_crypto": self.has_crypto,
            "crypto_type": self.crypto_type,
            "algorithm": self.algorithm,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "LabelTriple":
        return cls(bool(d["has_crypto"]), d["crypto_type"], d["algorithm"])


class TraceEvent(NamedTuple):
    """One executed instruction: execution index, static site, mnemonic, category."""

    seq: int
    site: int
    mnemonic: str
    category: Category


@dataclass(frozen=True)
class Trace:
    """An ordered instruction trace for one (program, variant) run."""

    program_id: str
    variant_id: str
    label: LabelTriple
    events: tuple[TraceEvent, ...]
    meta: dict[str, str] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.events)


def _format_meta(meta: dict[str, str]) -> str:
    parts = []
    for k in sorted(meta):
        v = meta[k]
        if not _META_TOKEN_RE.match(k) or not k:
            raise FormatError(f"bad meta key: {k!r}")
        if not _META_TOKEN_RE.match(v):
            raise FormatError(f"bad meta value for {k!r}: {v!r}")
        parts.append(f"{k}={v}")
    return ";".join(parts)


def _parse_meta(text: str) -> dict[str, str]:
    meta: dict[str, str] = {}
    if not text:
        return meta
    for part in text.split(";"):
        k, sep, v = part.partition("=")
        if not sep or not k:
            raise ParseError(f"bad meta entry: {part!r}", 1)
        meta[k] = v
    return meta


def write_trace(trace: Trace) -> bytes:
    """Serialize a trace; byte-stable for a fixed input."""
    label = trace.label
    header = (
        f"#trace v1 program={trace.program_id} variant={trace.variant_id}"
        f" label={'true' if label.has_crypto else 'false'},{label.crypto_type},{label.algorithm}"
        f" meta={_format_meta(trace.meta)}"
    )
    out = io.StringIO()
    out.write(header)
    out.write("\n")
    for ev in trace.events:
        out.write(f"{ev.seq} {ev.site} {ev.mnemonic} {ev.category.value}\n")
    return out.getvalue().encode("utf-8")


_HEADER_RE = re.compile(
    r"#trace v1 program=(?P<program>\S+) variant=(?P<variant>\S+)"
    r" label=(?P<crypto>true|false),(?P<type>[A-Z0-9]+),(?P<algo>[A-Z0-9]+)"
    r" meta=(?P<meta>\S*)\Z"
)


def read_trace(source: bytes | BinaryIO) -> Trace:
    """Parse one `.trace` stream, validating every event against the taxonomy."""
    if isinstance(source, (bytes, bytearray)):
        data = bytes(source)
    else:
        data = source.read()
    text = data.decode("utf-8")
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("empty stream", 1)

    m = _HEADER_RE.match(lines[0])
    if m is None:
        raise ParseError(f"bad header: {lines[0]!r}", 1)
    try:
        label = LabelTriple(m.group("crypto") == "true", m.group("type"), m.group("algo"))
    except ValueError as exc:
        raise ParseError(str(exc), 1) from None
    meta = _parse_meta(m.group("meta"))

    events = []
    expected_seq = 0
    category_names = {c.value: c for c in Category}
    append = events.append
    for line_no, line in enumerate(lines[1:], start=2):
        parts = line.split(" ")
        if len(parts) != 4:
            raise ParseError(f"expected 4 fields, got {len(parts)}", line_no)
        seq_s, site_s, mnemonic, cat_s = parts
        try:
            seq = int(seq_s)
            site = int(site_s)
        except ValueError:
            raise ParseError(f"bad integer field in {line!r}", line_no) from None
        if seq != expected_seq:
            raise FormatError(f"line {line_no}: seq {seq}, expected {expected_seq}")
        if site < 0:
            raise FormatError(f"line {line_no}: negative site {site}")
        category = category_names.get(cat_s)
        if category is None:
            raise ParseError(f"unknown category {cat_s!r}", line_no)
        true_category = MNEMONIC_CATEGORY.get(mnemonic)
        if true_category is None:
            raise UnknownMnemonic(f"line {line_no}: mnemonic not in taxonomy: {mnemonic!r}")
        if true_category is not category:
            raise FormatError(
                f"line {line_no}: {mnemonic} declared {cat_s}, taxonomy says {true_category.value}"
            )
        append(TraceEvent(seq, site, mnemonic, category))
        expected_seq += 1

    if not events:
        raise EmptyTrace(f"trace {m.group('program')}/{m.group('variant')} has no events")
    return Trace(m.group("program"), m.group("variant"), label, tuple(events), meta)


def read_trace_file(path) -> Trace:
    with open(path, "rb") as fp:
        return read_trace(fp)


def write_trace_file(trace: Trace, path) -> None:
    with open(path, "wb") as fp:
        fp.write(write_trace(trace))


def make_trace(
    program_id: str,
    variant_id: str,
    label: LabelTriple,
    raw_events: Iterable[tuple[int, str]],
    meta: dict[str, str] | None = None,
) -> Trace:
    """Build a Trace from (site, mnemonic) pairs, assigning seq and categories."""
    events = tuple(
        TraceEvent(seq, site, mnemonic, categorize(mnemonic))
        for seq, (site, mnemonic) in enumerate(raw_events)
    )
    return Trace(program_id, variant_id, label, events, dict(meta or {}))
