"""Text formats: ring headers and descriptors, matrix files, Gray images, adjacency lists."""

from __future__ import annotations

import re

import numpy as np

from .chain_ring import ChainRing, Family, format_token, make_ring, parse_token
from .codes import CodeMatrix
from .errors import ChainCodeError, ParseError
from .graphs import Graph


def format_ring_header(ring: ChainRing) -> str:
    if ring.family is Family.ZPM:
        return f"ring zpm p={ring.p} m={ring.m}"
    poly = ",".join(str(c) for c in ring.modulus_poly)
    return f"ring fqum p={ring.p} e={ring.e} m={ring.m} poly={poly}"


def _ring_from_fields(family: str, fields: dict[str, str]) -> ChainRing:
    try:
        p = int(fields["p"])
        m = int(fields["m"])
        e = int(fields.get("e", "1"))
        poly = [int(c) for c in fields["poly"].split(",")] if "poly" in fields else None
    except (KeyError, ValueError) as exc:
        raise ParseError(f"bad ring fields {fields}: {exc}") from exc
    return make_ring(family, p, e, m, poly)


def parse_ring_header(line: str) -> ChainRing:
    parts = line.split()
    if len(parts) < 3 or parts[0] != "ring" or parts[1] not in ("zpm", "fqum"):
        raise ParseError(f"expected 'ring zpm|fqum ...', got {line.strip()!r}", 1)
    fields = {}
    for item in parts[2:]:
        key, sep, value = item.partition("=")
        if not sep:
            raise ParseError(f"malformed ring field {item!r}", 1)
        fields[key] = value
    return _ring_from_fields(parts[1], fields)


def parse_ring_descriptor(text: str) -> ChainRing:
    """``zpm:p=2,m=3`` or ``fqum:p=2,e=2,m=2,poly=1,1,1``."""
    family, sep, rest = text.partition(":")
    if not sep or family not in ("zpm", "fqum"):
        raise ParseError(f"ring descriptor must start with 'zpm:' or 'fqum:', got {text!r}")
    fields: dict[str, str] = {}
    key = None
    for item in rest.split(","):
        if "=" in item:
            key, value = item.split("=", 1)
            fields[key] = value
        elif key is not None:
            # continuation of a comma-separated value such as poly=1,1,1
            fields[key] += "," + item
        else:
            raise ParseError(f"malformed ring descriptor {text!r}")
    return _ring_from_fields(family, fields)


def format_ring_descriptor(ring: ChainRing) -> str:
    if ring.family is Family.ZPM:
        return f"zpm:p={ring.p},m={ring.m}"
    poly = ",".join(str(c) for c in ring.modulus_poly)
    return f"fqum:p={ring.p},e={ring.e},m={ring.m},poly={poly}"


def format_matrix(gen: CodeMatrix) -> str:
    lines = [format_ring_header(gen.ring), f"{gen.rows} {gen.cols}"]
    for row in gen.entries:
        lines.append(" ".join(format_token(gen.ring, int(x)) for x in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> CodeMatrix:
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty matrix file", 1)
    try:
        ring = parse_ring_header(lines[0])
    except ParseError:
        raise
    except ChainCodeError as exc:
        raise ParseError(str(exc), 1) from exc
    if len(lines) < 2 or not re.fullmatch(r"\s*\d+\s+\d+\s*", lines[1]):
        raise ParseError("expected '<rows> <cols>'", 2)
    rows, cols = (int(x) for x in lines[1].split())
    body = lines[2:]
    if len(body) < rows or any(line.strip() for line in body[rows:]):
        raise ParseError(f"expected exactly {rows} matrix rows", 2 + min(len(body), rows) + 1)
    entries = np.zeros((rows, cols), dtype=np.int64)
    for i in range(rows):
        tokens = body[i].split()
        if len(tokens) != cols:
            raise ParseError(f"expected {cols} entries, found {len(tokens)}", i + 3)
        for j, tok in enumerate(tokens):
            try:
                entries[i, j] = parse_token(ring, tok)
            except (ChainCodeError, ValueError) as exc:
                raise ParseError(str(exc), i + 3) from exc
    return CodeMatrix(ring, entries)


def read_matrix(path) -> CodeMatrix:
    with open(path, encoding="utf-8") as fh:
        return parse_matrix(fh.read())


def write_matrix(gen: CodeMatrix, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_matrix(gen))


_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


def format_image(vectors: np.ndarray) -> str:
    """One vector per line, field-element digits concatenated."""
    return "".join("".join(_DIGITS[int(x)] for x in row) + "\n" for row in np.asarray(vectors))


def format_adjacency(g: Graph) -> str:
    lines = [str(g.n_vertices)]
    lines += [" ".join(str(j) for j in g.neighbors(i)) for i in range(g.n_vertices)]
    return "\n".join(lines) + "\n"


def parse_adjacency(text: str) -> Graph:
    lines = text.splitlines()
    n = int(lines[0])
    adj = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for tok in lines[i + 1].split():
            adj[i, int(tok)] = 1
    return Graph(adj, np.arange(n)[:, None])
