"""CSV, JSON and PGM file formats used by the command line tool."""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from .signals import ComponentModel
from .stft import TFMatrix

SIGNAL_HEADER = ["n", "re", "im"]
MATRIX_HEADER = ["n", "l", "re", "im"]
POWER_HEADER = ["n", "xi", "power"]


class DataError(ValueError):
    """Malformed or inconsistent input data."""


def _fmt(v) -> str:
    # repr of a float is the shortest string that round-trips exactly
    return repr(float(v))


def write_signal(path, x) -> None:
    x = np.asarray(x, dtype=complex)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(SIGNAL_HEADER)
        for n, v in enumerate(x):
            w.writerow([n, _fmt(v.real), _fmt(v.imag)])


def _rows(path, header, n_int):
    """Yield ``(lineno, values)`` with the first ``n_int`` fields as ints, the rest floats."""
    try:
        fh = open(path, newline="")
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc.strerror}") from None
    with fh:
        reader = csv.reader(fh)
        first = next(reader, None)
        if first != header:
            raise DataError(f"{path}:1: expected header {','.join(header)}, got {first}")
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(header):
                raise DataError(f"{path}:{lineno}: expected {len(header)} fields, got {len(row)}")
            try:
                yield lineno, [int(v) for v in row[:n_int]] + [float(v) for v in row[n_int:]]
            except ValueError as exc:
                raise DataError(f"{path}:{lineno}: {exc}") from None


def read_signal(path) -> np.ndarray:
    vals = {}
    for lineno, (n, re, im) in _rows(path, SIGNAL_HEADER, 1):
        if n in vals:
            raise DataError(f"{path}:{lineno}: duplicate index {n}")
        vals[n] = complex(re, im)
    N = len(vals)
    if N < 2 or sorted(vals) != list(range(N)):
        raise DataError(f"{path}: indices must be 0..N-1 with N >= 2")
    return np.array([vals[n] for n in range(N)])


def write_matrix(path, T: TFMatrix) -> None:
    E = T.entries
    N = T.N
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        if T.kind == "itvps":
            w.writerow(POWER_HEADER)
            for n in range(N):
                for xi in range(N):
                    w.writerow([n, xi, _fmt(E[n, xi].real)])
        else:
            w.writerow(MATRIX_HEADER)
            for n in range(N):
                for l in range(N):
                    v = E[n, l]
                    w.writerow([n, l, _fmt(v.real), _fmt(v.imag)])


def read_matrix(path, kind: str | None = None) -> TFMatrix:
    """Read either matrix CSV layout; ``kind`` tags a complex matrix (default ``stft``)."""
    try:
        with open(path, newline="") as fh:
            head = fh.readline().strip().split(",")
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc.strerror}") from None
    power = head == POWER_HEADER
    entries = list(_rows(path, POWER_HEADER if power else MATRIX_HEADER, 2))
    count = len(entries)
    N = int(round(count**0.5))
    if count == 0 or N * N != count:
        raise DataError(f"{path}: {count} data rows is not a square N*N count")
    E = np.zeros((N, N), dtype=complex)
    seen = np.zeros((N, N), dtype=bool)
    for lineno, row in entries:
        n, l = row[0], row[1]
        if not (0 <= n < N and 0 <= l < N):
            raise DataError(f"{path}:{lineno}: index ({n}, {l}) outside 0..{N - 1}")
        if seen[n, l]:
            raise DataError(f"{path}:{lineno}: duplicate entry ({n}, {l})")
        seen[n, l] = True
        E[n, l] = row[2] if power else complex(row[2], row[3])
    return TFMatrix(E, "itvps" if power else (kind or "stft"))


def write_model(path, model: ComponentModel) -> None:
    Path(path).write_text(json.dumps(model.to_dict(), indent=2, sort_keys=True) + "\n")


def read_model(path) -> ComponentModel:
    try:
        data = json.loads(Path(path).read_text())
        return ComponentModel.from_dict(data)
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc.strerror}") from None
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise DataError(f"{path}: invalid model: {exc}") from None


def heatmap(T, log: bool = False) -> np.ndarray:
    """8-bit image with time left to right and frequency bin ``N-1`` on the top row."""
    a = np.abs(np.asarray(T))
    if a.size == 0:
        raise DataError("empty matrix")
    v = np.log10(1 + a**2) if log else a
    peak = v.max()
    img = np.zeros_like(v) if peak == 0 else np.rint(255 * v / peak)
    # rows of T are time; image rows are frequency, highest first
    return img.T[::-1].astype(np.uint8)


def write_pgm(path, img: np.ndarray) -> None:
    h, w = img.shape
    with open(path, "wb") as fh:
        fh.write(f"P5\n{w} {h}\n255\n".encode("ascii"))
        fh.write(np.ascontiguousarray(img, dtype=np.uint8).tobytes())


def read_pgm(path) -> np.ndarray:
    data = Path(path).read_bytes()
    fields = []
    pos = 0
    while len(fields) < 4:
        while data[pos : pos + 1].isspace():
            pos += 1
        end = pos
        while end < len(data) and not data[end : end + 1].isspace():
            end += 1
        fields.append(data[pos:end])
        pos = end
    if fields[0] != b"P5" or fields[3] != b"255":
        raise DataError(f"{path}: not an 8-bit binary PGM")
    w, h = int(fields[1]), int(fields[2])
    # exactly one whitespace byte separates maxval from the raster
    return np.frombuffer(data, dtype=np.uint8, count=w * h, offset=pos + 1).reshape(h, w)
