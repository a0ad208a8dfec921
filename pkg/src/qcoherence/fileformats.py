"""Plain-text matrix and Kraus-channel files.

Matrix file::

    # optional comment lines
    2
    0.5,0 0.5,0
    0.5,0 0.5,0

Each entry is ``re,im`` with no space inside the pair. A channel file starts
with ``dim n_kraus`` and is followed by ``n_kraus`` matrix blocks.
"""
from __future__ import annotations

import os
from typing import Iterator

import numpy as np

from .errors import MatrixFormatError


def _lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _parse_entry(tok: str, lineno: int) -> complex:
    parts = tok.split(",")
    if len(parts) != 2:
        raise MatrixFormatError(f"line {lineno}: entry {tok!r} is not of the form re,im")
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        raise MatrixFormatError(f"line {lineno}: entry {tok!r} is not numeric") from None


def _parse_dim(line: str, lineno: int) -> int:
    try:
        dim = int(line)
    except ValueError:
        raise MatrixFormatError(f"line {lineno}: expected an integer dimension, got {line!r}") from None
    if dim <= 0:
        raise MatrixFormatError(f"line {lineno}: dimension must be positive, got {dim}")
    return dim


def _read_block(it: Iterator[tuple[int, str]]) -> np.ndarray:
    try:
        lineno, line = next(it)
    except StopIteration:
        raise MatrixFormatError("unexpected end of input: missing dimension line") from None
    dim = _parse_dim(line, lineno)
    out = np.empty((dim, dim), dtype=np.complex128)
    for i in range(dim):
        try:
            lineno, line = next(it)
        except StopIteration:
            raise MatrixFormatError(f"unexpected end of input: expected {dim} rows, got {i}") from None
        toks = line.split()
        if len(toks) != dim:
            raise MatrixFormatError(f"line {lineno}: expected {dim} entries, got {len(toks)}")
        out[i] = [_parse_entry(t, lineno) for t in toks]
    return out


def parse_matrix(text: str) -> np.ndarray:
    it = _lines(text)
    out = _read_block(it)
    extra = next(it, None)
    if extra is not None:
        raise MatrixFormatError(f"line {extra[0]}: trailing content after matrix")
    return out


def format_matrix(m) -> str:
    m = np.asarray(m, dtype=np.complex128)
    rows = [str(m.shape[0])]
    for row in m:
        rows.append(" ".join(f"{z.real:.17g},{z.imag:.17g}" for z in row))
    return "\n".join(rows) + "\n"


def read_matrix(path: str | os.PathLike) -> np.ndarray:
    with open(path) as fh:
        return parse_matrix(fh.read())


def write_matrix(path: str | os.PathLike, m) -> None:
    with open(path, "w") as fh:
        fh.write(format_matrix(m))


def parse_kraus(text: str) -> list[np.ndarray]:
    it = _lines(text)
    try:
        lineno, header = next(it)
    except StopIteration:
        raise MatrixFormatError("empty channel file") from None
    toks = header.split()
    if len(toks) != 2:
        raise MatrixFormatError(f"line {lineno}: expected 'dim n_kraus', got {header!r}")
    dim, n_kraus = (_parse_dim(t, lineno) for t in toks)
    kraus = []
    for _ in range(n_kraus):
        k = _read_block(it)
        if k.shape[0] != dim:
            raise MatrixFormatError(f"Kraus block has dimension {k.shape[0]}, header says {dim}")
        kraus.append(k)
    extra = next(it, None)
    if extra is not None:
        raise MatrixFormatError(f"line {extra[0]}: trailing content after {n_kraus} Kraus blocks")
    return kraus


def format_kraus(kraus) -> str:
    kraus = [np.asarray(k) for k in kraus]
    return f"{kraus[0].shape[0]} {len(kraus)}\n" + "".join(format_matrix(k) for k in kraus)
