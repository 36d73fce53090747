"""Arithmetization of syntax.

A string ``c1 c2 ... cn`` over a symbol table is coded as

    2**n * 3**code(c1) * 5**code(c2) * ... * p(n+1)**code(cn)

where ``p(j)`` is the j-th prime.  The exponent of 2 records the length, so
the empty string codes to 1.  Decoding is plain trial division by successive
primes; a code for a string of length n has no prime factor beyond p(n+1).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Mapping, Optional, Union

from . import syntax

# The six codes fixed by the classic worked example; every table keeps them.
CORE_CODES = {"(": 1, ")": 3, "~": 7, "0": 8, "=": 13, "s": 24}


class CodecError(ValueError):
    pass


class UnknownSymbol(CodecError):
    def __init__(self, char: str, position: int):
        self.char = char
        self.position = position
        super().__init__(f"symbol {char!r} at position {position} has no code")


class NotACode(CodecError):
    """``n`` does not have the shape of any string's code."""


class UnknownCode(CodecError):
    def __init__(self, code: int, position: int):
        self.code = code
        self.position = position
        super().__init__(f"exponent {code} at position {position} is not the code of any symbol")


_primes = [2, 3]


def nth_prime(j: int) -> int:
    """``nth_prime(1) == 2``, ``nth_prime(2) == 3``, ..."""
    if j < 1:
        raise ValueError("primes are numbered from 1")
    candidate = _primes[-1]
    while len(_primes) < j:
        candidate += 2
        for p in _primes:
            if p * p > candidate:
                _primes.append(candidate)
                break
            if candidate % p == 0:
                break
    return _primes[j - 1]


def _valuation(n: int, p: int) -> tuple:
    """``(e, n // p**e)`` with ``p**e`` the largest power of ``p`` dividing ``n``.

    Symbol codes reach the dozens, so divide by p, p**2, p**4, ... and then
    walk back down instead of peeling off one factor at a time.
    """
    if n == 0:
        raise ValueError("0 is divisible by every power")
    if n % p:
        return 0, n
    powers = [p]
    while n % (powers[-1] * powers[-1]) == 0:
        powers.append(powers[-1] * powers[-1])
    e = 0
    for i in range(len(powers) - 1, -1, -1):
        q, r = divmod(n, powers[i])
        if r == 0:
            n = q
            e += 1 << i
    return e, n


@dataclass(frozen=True)
class SymbolTable:
    codes: Mapping[str, int]

    def __post_init__(self):
        codes = dict(self.codes)
        for ch, code in codes.items():
            if len(ch) != 1:
                raise ValueError(f"symbols are single characters, got {ch!r}")
            if not isinstance(code, int) or isinstance(code, bool) or code < 1:
                raise ValueError(f"code for {ch!r} must be a positive integer, got {code!r}")
        if len(set(codes.values())) != len(codes):
            raise ValueError("codes must be distinct")
        for ch, code in CORE_CODES.items():
            if codes.get(ch) != code:
                raise ValueError(f"table must code {ch!r} as {code}")
        object.__setattr__(self, "codes", codes)
        object.__setattr__(self, "_symbols", {v: k for k, v in codes.items()})

    def __hash__(self):
        return hash(tuple(sorted(self.codes.items())))

    def code(self, ch: str) -> int:
        return self.codes[ch]

    def symbol(self, code: int) -> Optional[str]:
        return self._symbols.get(code)

    @property
    def alphabet(self) -> str:
        return "".join(sorted(self.codes, key=self.codes.get))

    @classmethod
    def load(cls, path: Union[str, Path]) -> "SymbolTable":
        with open(path, encoding="utf-8") as fh:
            return cls(json.load(fh))

    @classmethod
    def default(cls) -> "SymbolTable":
        return _DEFAULT


_DEFAULT = SymbolTable(json.loads(resources.files("tarski").joinpath("data/symbols.json").read_text("utf-8")))


# Python caps int<->str conversion at a few thousand digits; codes of
# ordinary formulas are far longer, so convert in chunks below the cap.
_CHUNK = 2000


def to_decimal(n: int) -> str:
    if n < 0:
        return "-" + to_decimal(-n)
    if n < 10**_CHUNK:
        return str(n)
    digits = 1 + int(n.bit_length() * 0.30103)
    half = digits // 2
    high, low = divmod(n, 10**half)
    return to_decimal(high) + to_decimal(low).rjust(half, "0")


def from_decimal(text: str) -> int:
    text = text.strip()
    if not text.isdigit() or not text.isascii():
        raise ValueError(f"not a decimal natural number: {text[:40]!r}")
    if len(text) <= _CHUNK:
        return int(text)
    half = len(text) // 2
    return from_decimal(text[:-half]) * 10**half + from_decimal(text[-half:])


@dataclass(frozen=True)
class GodelCode:
    value: int
    table: SymbolTable

    def __int__(self):
        return self.value

    def __str__(self):
        return to_decimal(self.value)

    def exponents(self) -> list:
        """Exponent vector over 2, 3, 5, ... up to the last symbol prime."""
        return exponent_vector(self.value)


def exponent_vector(n: int) -> list:
    length, _ = _valuation(n, 2)
    return [length] + [_valuation(n, nth_prime(j))[0] for j in range(2, length + 2)]


def encode(t: SymbolTable, s: str) -> GodelCode:
    value = 2 ** len(s)
    for i, ch in enumerate(s):
        try:
            code = t.codes[ch]
        except KeyError:
            raise UnknownSymbol(ch, i) from None
        value *= nth_prime(i + 2) ** code
    return GodelCode(value, t)


_windows = {}


def _window(p: int, width: int) -> int:
    key = (p, width)
    if key not in _windows:
        _windows[key] = p**width
    return _windows[key]


@dataclass(frozen=True)
class Decoded:
    text: str
    well_formed: bool


def decode_string(t: SymbolTable, n: int) -> str:
    """The string coded by ``n``; raises :class:`NotACode` or :class:`UnknownCode`."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise NotACode(f"codes are positive integers, got {n!r}")
    length, rest = _valuation(n, 2)
    exponents = []
    rebuilt = 1
    width = max(t.codes.values()) + 1
    for i in range(length):
        p = nth_prime(i + 2)
        # v_p(rest) == v_p(rest mod p**W) whenever it is below W, and W exceeds
        # every code; the residue is small, so the full number is never divided.
        residue = rest % _window(p, width)
        e, _ = _valuation(residue if residue else rest, p)
        if e == 0:
            raise NotACode(f"length field is {length} but prime {p} (position {i}) is absent")
        exponents.append(e)
        rebuilt *= p**e
    if rebuilt != rest:
        leftover = to_decimal(rest // rebuilt)
        if len(leftover) > 40:
            leftover = f"of {len(leftover)} digits"
        raise NotACode(f"length field is {length} but a factor {leftover} remains beyond prime {nth_prime(length + 1)}")
    chars = []
    for i, e in enumerate(exponents):
        ch = t.symbol(e)
        if ch is None:
            raise UnknownCode(e, i)
        chars.append(ch)
    return "".join(chars)


def decode(t: SymbolTable, n: int, sig: Optional[syntax.Signature] = None) -> Decoded:
    """Decode ``n`` and report whether the result is a well-formed formula.

    Well-formed means: a formula of the object language (of ``sig``, or of
    any consistent relational vocabulary when ``sig`` is None), or a formula
    of first-order arithmetic built from ``0``, ``s``, ``=`` and variables.
    """
    text = decode_string(t, n)
    return Decoded(text, is_well_formed(text, sig))


def is_well_formed(text: str, sig: Optional[syntax.Signature] = None) -> bool:
    return syntax.is_well_formed(text, sig) or is_arithmetic_formula(text)


def numeral(n: int) -> str:
    if n < 0:
        raise ValueError("numerals name natural numbers")
    return "s(" * n + "0" + ")" * n


def code_of_formula(t: SymbolTable, f: syntax.Formula) -> GodelCode:
    return encode(t, syntax.render(f))


# -- first-order arithmetic recognizer ---------------------------------------
#
#   formula := "~" formula | quant | "(" formula ")" | "(" formula BIN formula ")"
#            | term "=" term
#   term    := "0" | "s" "(" term ")" | VAR

_ARITH_TOKEN = re.compile(r"\s*(<->|->|forall|exists|x[1-9][0-9]*|[~()=|&.0s])")


def _arith_tokens(text: str) -> Optional[list]:
    out, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _ARITH_TOKEN.match(text, pos)
        if m is None:
            return None
        out.append(m.group(1))
        pos = m.end()
    return out


class _Reject(Exception):
    pass


def is_arithmetic_formula(text: str) -> bool:
    toks = _arith_tokens(text)
    if not toks:
        return False
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else None

    def take(expected=None):
        nonlocal pos
        tok = peek()
        if tok is None or (expected is not None and tok != expected):
            raise _Reject
        pos += 1
        return tok

    def term():
        tok = take()
        if tok == "0" or tok.startswith("x"):
            return
        if tok == "s":
            take("(")
            term()
            take(")")
            return
        raise _Reject

    def formula():
        tok = peek()
        if tok == "~":
            take()
            formula()
        elif tok in ("forall", "exists"):
            take()
            if not (peek() or "").startswith("x"):
                raise _Reject
            take()
            take(".")
            formula()
        elif tok == "(":
            take()
            formula()
            if peek() in ("|", "&", "->", "<->"):
                take()
                formula()
            take(")")
        else:
            term()
            take("=")
            term()

    try:
        formula()
    except _Reject:
        return False
    return pos == len(toks)
