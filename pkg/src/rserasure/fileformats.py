"""Symbol and erasure-pattern files.

Symbol files hold one symbol per line as fixed-width hex (ceil(m/4)
digits), or raw little-endian binary with ceil(m/8) bytes per symbol.
The format is always chosen by the caller, never sniffed.
"""
from __future__ import annotations

import numpy as np

FORMATS = ("hex", "bin")


def hex_width(m):
    return -(-m // 4)


def byte_width(m):
    return -(-m // 8)


def dump_symbols(symbols, m, fmt="hex"):
    symbols = [int(s) for s in symbols]
    if fmt == "hex":
        w = hex_width(m)
        return "".join(f"{s:0{w}x}\n" for s in symbols).encode("ascii")
    if fmt == "bin":
        w = byte_width(m)
        return b"".join(s.to_bytes(w, "little") for s in symbols)
    raise ValueError(f"unknown symbol format {fmt!r}")


def load_symbols(raw, m, fmt="hex"):
    if fmt == "hex":
        lines = [ln.strip() for ln in raw.decode("ascii").splitlines()]
        try:
            values = [int(ln, 16) for ln in lines if ln]
        except ValueError as exc:
            raise ValueError(f"bad hex symbol: {exc}") from None
    elif fmt == "bin":
        w = byte_width(m)
        if len(raw) % w:
            raise ValueError(f"binary symbol file length {len(raw)} is not a multiple of {w}")
        values = [int.from_bytes(raw[i:i + w], "little") for i in range(0, len(raw), w)]
    else:
        raise ValueError(f"unknown symbol format {fmt!r}")
    arr = np.array(values, dtype=np.int64)
    if arr.size and arr.max() >> m:
        raise ValueError(f"symbol wider than {m} bits")
    return arr


def read_symbols(path, m, fmt="hex"):
    with open(path, "rb") as fh:
        return load_symbols(fh.read(), m, fmt)


def write_symbols(path, symbols, m, fmt="hex"):
    with open(path, "wb") as fh:
        fh.write(dump_symbols(symbols, m, fmt))


def parse_erasures(text):
    """Comma-separated decimal positions on one line; blank means none."""
    text = text.strip()
    if not text:
        return []
    if "\n" in text:
        raise ValueError("erasure pattern must be a single line")
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"bad erasure list {text!r}") from None


def read_erasures(path):
    with open(path) as fh:
        return parse_erasures(fh.read())


def format_erasures(positions):
    return ",".join(str(int(p)) for p in positions) + "\n"
