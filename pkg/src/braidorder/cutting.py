"""Cutting sequences of arcs in the punctured disc.

The reference diagram Sigma is the horizontal line through the ``n``
punctures, cut into segments Sigma_1, ..., Sigma_{n+1} (the outer two run to
the boundary).  An arc is recorded by the signed indices of the segments it
crosses.  The generator sigma_j is the half twist along Sigma_{j+1}, which
rewrites every crossing of that segment and leaves the others alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .alternating import Arrangement
from .errors import IndexOutOfRange, StrandMismatch
from .words import BraidWord, _require_positive


@dataclass(frozen=True)
class CuttingSequence:
    punctures: int
    entries: tuple[int, ...] = ()

    def __post_init__(self):
        entries = tuple(int(v) for v in self.entries)
        for v in entries:
            if not 1 <= abs(v) <= self.punctures + 1:
                raise ValueError(f"entry {v} out of range for {self.punctures} punctures")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def parse(cls, text: str, punctures: int) -> CuttingSequence:
        body = text.strip()
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        toks = [t for t in body.replace(",", " ").split()]
        return cls(punctures, tuple(int(t) for t in toks))

    def __str__(self) -> str:
        return "(" + ",".join(f"{v:+d}" for v in self.entries) + ")"

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def is_tight(self) -> bool:
        e = self.entries
        return all(e[i] != -e[i + 1] for i in range(len(e) - 1))


def _twist(entries: Iterable[int], j: int) -> list[int]:
    out: list[int] = []
    hit = j + 1
    for v in entries:
        if v == hit:
            out.extend((j, -(j + 1), j + 2))
        elif v == -hit:
            out.extend((-(j + 2), j + 1, -j))
        else:
            out.append(v)
    return out


def _tighten(entries: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for v in entries:
        if stack and stack[-1] == -v:
            stack.pop()
        else:
            stack.append(v)
    return tuple(stack)


def apply_generator(c: CuttingSequence, j: int) -> CuttingSequence:
    """Image under sigma_j, without tightening."""
    if not 1 <= j <= c.punctures - 1:
        raise IndexOutOfRange(f"generator {j} not in 1..{c.punctures - 1}")
    return CuttingSequence(c.punctures, tuple(_twist(c.entries, j)))


def tighten(c: CuttingSequence) -> CuttingSequence:
    """Remove bigons, i.e. adjacent pairs ``(+i, -i)`` or ``(-i, +i)``."""
    return CuttingSequence(c.punctures, _tighten(c.entries))


def act(w: BraidWord, c: CuttingSequence) -> CuttingSequence:
    """Tight cutting sequence of ``w`` applied to the arc ``c``.

    The rightmost letter acts first.
    """
    w = _require_positive(w)
    if w.strands != c.punctures:
        raise StrandMismatch(f"{w.strands}-braid acting on {c.punctures} punctures")
    entries: list[int] | tuple[int, ...] = c.entries
    for j in reversed(w.letters):
        entries = _tighten(_twist(entries, j))
    return CuttingSequence(c.punctures, _tighten(entries))


def gamma1(a: Arrangement) -> CuttingSequence:
    """The first arc of the normal curve diagram: it crosses Sigma once,
    between punctures k(1) and k(1) + 1."""
    return CuttingSequence(a.strands, (a[1] + 1,))
