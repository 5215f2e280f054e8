"""Line-oriented text formats: instance files, precedence files, key=value records.

Instance file::

    # comment
    m 2
    values 18 10 6 4

Precedence file (jobs in list order; a dependency must name an earlier job)::

    m 3
    job a 30
    job d 20
    job e 40 d

Blank lines and lines whose first non-blank character is ``#`` are ignored.
Record lines are space-separated ``key=value`` pairs. Integer lists are
comma-separated, and partitions use ``|`` between parts and ``-`` for an
empty part. Every index that appears in a file or record is 1-based.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

from .core import BinCountError, Instance, InstanceError, Partition
from .precedence import Job, PrecedenceInstance


class ParseError(ValueError):
    def __init__(self, message, line=None, col=None, source="<input>"):
        self.line, self.col, self.source = line, col, source
        where = source
        if line is not None:
            where += f":{line}"
            if col is not None:
                where += f":{col}"
        super().__init__(f"{where}: {message}")


def _tokens(text):
    """Yield (line number, [(column, token), ...]) for each meaningful line."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        toks, col = [], 0
        for part in raw.split():
            col = raw.index(part, col)
            toks.append((col + 1, part))
            col += len(part)
        yield lineno, toks


def _int(tok, lineno, source):
    col, text = tok
    try:
        return int(text, 10)
    except ValueError:
        raise ParseError(f"expected an integer, got {text!r}", lineno, col, source) from None


def parse_instance_text(text: str, source: str = "<input>") -> Instance:
    m = values = None
    m_line = 1
    for lineno, toks in _tokens(text):
        col, key = toks[0]
        if key == "m":
            if m is not None:
                raise ParseError("duplicate 'm' line", lineno, col, source)
            if len(toks) != 2:
                raise ParseError("'m' takes exactly one integer", lineno, col, source)
            m, m_line = _int(toks[1], lineno, source), lineno
        elif key == "values":
            if values is not None:
                raise ParseError("duplicate 'values' line", lineno, col, source)
            if len(toks) < 2:
                raise ParseError("'values' needs at least one integer", lineno, col, source)
            values = [_int(t, lineno, source) for t in toks[1:]]
            values_line = lineno
            for (c, _), v in zip(toks[1:], values):
                if v < 1:
                    raise ParseError(f"value {v} is not positive", lineno, c, source)
        else:
            raise ParseError(f"unknown directive {key!r}", lineno, col, source)
    if m is None:
        raise ParseError("missing 'm' line", source=source)
    if values is None:
        raise ParseError("missing 'values' line", source=source)
    try:
        return Instance(tuple(values), m)
    except InstanceError as exc:
        line = m_line if isinstance(exc, BinCountError) else values_line
        raise ParseError(str(exc), line, None, source) from None


def parse_precedence_text(text: str, source: str = "<input>") -> PrecedenceInstance:
    m = None
    jobs, deps, declared = [], set(), set()
    for lineno, toks in _tokens(text):
        col, key = toks[0]
        if key == "m":
            if m is not None:
                raise ParseError("duplicate 'm' line", lineno, col, source)
            if len(toks) != 2:
                raise ParseError("'m' takes exactly one integer", lineno, col, source)
            m = _int(toks[1], lineno, source)
            if m < 1:
                raise ParseError(f"m must be >= 1, got {m}", lineno, toks[1][0], source)
        elif key == "job":
            if len(toks) < 3:
                raise ParseError("expected 'job <id> <time> [dep ...]'", lineno, col, source)
            jcol, jid = toks[1]
            if jid in declared:
                raise ParseError(f"job {jid!r} declared twice", lineno, jcol, source)
            time = _int(toks[2], lineno, source)
            if time < 1:
                raise ParseError(f"processing time {time} is not positive", lineno, toks[2][0], source)
            for dcol, dep in toks[3:]:
                if dep not in declared:
                    raise ParseError(f"dependency {dep!r} is not a previously declared job", lineno, dcol, source)
                deps.add((dep, jid))
            declared.add(jid)
            jobs.append(Job(jid, time))
        else:
            raise ParseError(f"unknown directive {key!r}", lineno, col, source)
    if m is None:
        raise ParseError("missing 'm' line", source=source)
    if not jobs:
        raise ParseError("no 'job' lines", source=source)
    # dependencies always point backwards, so the graph cannot be cyclic here
    return PrecedenceInstance(tuple(jobs), frozenset(deps), m)


def read_instance(path) -> Instance:
    return parse_instance_text(Path(path).read_text(), str(path))


def read_precedence(path) -> PrecedenceInstance:
    return parse_precedence_text(Path(path).read_text(), str(path))


def format_instance_text(inst: Instance) -> str:
    return f"m {inst.m}\nvalues {' '.join(map(str, inst.values))}\n"


# --- key=value records --------------------------------------------------------


def ints(xs: Sequence[int]) -> str:
    return ",".join(str(x) for x in xs)


def index_set(part) -> str:
    return ",".join(str(i + 1) for i in sorted(part))


def parts_field(parts) -> str:
    return "|".join(index_set(p) or "-" for p in parts)


def format_record(fields: dict) -> str:
    for k, v in fields.items():
        if " " in str(v) or "=" in k:
            raise ValueError(f"field {k}={v!r} cannot be written as a record")
    return " ".join(f"{k}={v}" for k, v in fields.items())


def parse_record(line: str) -> dict:
    out = {}
    for tok in line.split():
        key, sep, value = tok.partition("=")
        if not sep:
            raise ParseError(f"record token {tok!r} is not key=value")
        out[key] = value
    return out


def parse_ints(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(",")) if text else ()


def parse_parts(text: str) -> tuple[frozenset[int], ...]:
    return tuple(
        frozenset() if p == "-" else frozenset(int(i) - 1 for i in p.split(","))
        for p in text.split("|")
    )


def instance_from_record(rec: dict) -> Instance:
    return Instance(parse_ints(rec["values"]), int(rec["m"]))


def partition_from_record(rec: dict, values: Sequence[int]) -> Partition:
    return Partition.from_parts(values, parse_parts(rec["parts"]))
