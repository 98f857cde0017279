"""Certificate files: a sequence plus a machine-checkable claim.

The on-disk format is line-oriented UTF-8 with LF endings and a fixed
header order, so serialize(parse(text)) == text byte for byte:

    DAVENPORT-CERT 1
    group: 2,2,2,2,6
    claim: zero-sum-free
    length: 10
    provenance: lzfs n=2 k=3 r=4 p=2 k1=3 t=1 ell=3
    terms:
    1,0,0,0,3
    ...

The claim line is either ``zero-sum-free`` or ``non-dispersive L`` where L
is the single length every nonempty zero-sum subsequence must have.
Comments are not permitted and unknown header keys are an error.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .groups import (
    GroupElement,
    GroupSpec,
    GSequence,
    parse_element_literal,
    parse_group_literal,
)

FORMAT_HEADER = "DAVENPORT-CERT 1"
CLAIM_ZERO_SUM_FREE = "zero-sum-free"
CLAIM_NON_DISPERSIVE = "non-dispersive"


@dataclass(frozen=True)
class Certificate:
    group: GroupSpec
    claim: str
    unique_length: int | None
    provenance: str
    terms: tuple[GroupElement, ...]

    @property
    def length(self) -> int:
        return len(self.terms)

    def sequence(self) -> GSequence:
        return GSequence(self.group, self.terms)


def make_certificate(
    seq: GSequence, claim: str, provenance: str, unique_length: int | None = None
) -> Certificate:
    if claim == CLAIM_ZERO_SUM_FREE:
        if unique_length is not None:
            raise ParseError("zero-sum-free certificates carry no unique length")
    elif claim == CLAIM_NON_DISPERSIVE:
        if unique_length is None or unique_length < 1:
            raise ParseError("non-dispersive certificates need a unique length >= 1")
    else:
        raise ParseError(f"unknown claim kind {claim!r}")
    return Certificate(seq.group, claim, unique_length, provenance, seq.terms)


def serialize(cert: Certificate) -> str:
    claim_line = cert.claim
    if cert.claim == CLAIM_NON_DISPERSIVE:
        claim_line = f"{cert.claim} {cert.unique_length}"
    lines = [
        FORMAT_HEADER,
        f"group: {cert.group.literal()}",
        f"claim: {claim_line}",
        f"length: {cert.length}",
        f"provenance: {cert.provenance}",
        "terms:",
    ]
    lines.extend(t.literal() for t in cert.terms)
    return "\n".join(lines) + "\n"


def _expect_key(line: str, key: str, lineno: int) -> str:
    prefix = key + ": "
    if not line.startswith(prefix):
        raise ParseError(f"line {lineno}: expected '{key}:' header, got {line!r}")
    return line[len(prefix) :]


def parse_certificate(text: str) -> Certificate:
    if not text.endswith("\n"):
        raise ParseError("certificate must end with a trailing newline")
    lines = text.split("\n")[:-1]
    if len(lines) < 6:
        raise ParseError("certificate is truncated")
    if lines[0] != FORMAT_HEADER:
        raise ParseError(f"line 1: expected {FORMAT_HEADER!r}, got {lines[0]!r}")
    group = parse_group_literal(_expect_key(lines[1], "group", 2))
    claim_value = _expect_key(lines[2], "claim", 3)
    if claim_value == CLAIM_ZERO_SUM_FREE:
        claim, unique_length = CLAIM_ZERO_SUM_FREE, None
    elif claim_value.startswith(CLAIM_NON_DISPERSIVE + " "):
        claim = CLAIM_NON_DISPERSIVE
        raw = claim_value[len(CLAIM_NON_DISPERSIVE) + 1 :]
        try:
            unique_length = int(raw)
        except ValueError as exc:
            raise ParseError(f"line 3: bad unique length {raw!r}") from exc
        if unique_length < 1:
            raise ParseError("line 3: unique length must be >= 1")
    else:
        raise ParseError(f"line 3: unknown claim {claim_value!r}")
    raw_length = _expect_key(lines[3], "length", 4)
    try:
        length = int(raw_length)
    except ValueError as exc:
        raise ParseError(f"line 4: bad length {raw_length!r}") from exc
    if length < 0:
        raise ParseError("line 4: length must be >= 0")
    provenance = _expect_key(lines[4], "provenance", 5)
    if lines[5] != "terms:":
        raise ParseError(f"line 6: expected 'terms:', got {lines[5]!r}")
    term_lines = lines[6:]
    if len(term_lines) != length:
        raise ParseError(
            f"expected {length} term lines, found {len(term_lines)}"
        )
    terms = tuple(parse_element_literal(group, line) for line in term_lines)
    return Certificate(group, claim, unique_length, provenance, terms)


def write_certificate(cert: Certificate, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize(cert))


def read_certificate(path) -> Certificate:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        return parse_certificate(fh.read())
