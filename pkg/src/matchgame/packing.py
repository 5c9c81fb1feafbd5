"""Exact packing parameters: maximum packing, minimum maximal packing, and
triangle partitions.

A packing is a collection of pairwise vertex-disjoint copies of the pattern.
``mu`` computes the maximum size, ``min_maximal`` the smallest size of a
packing that cannot be extended, both with reconstructed witnesses.  The
three-vertex path uses the shared search kernels; any other pattern goes
through the generic embedding enumerator.  Searches are exponential, so both
enforce an explicit vertex cap instead of silently degrading to a heuristic.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import engine, kernels
from .engine import GENERIC, Pattern
from .errors import CapExceeded, InvalidInput
from .graphs import Graph, VertexSet, bits_of

DEFAULT_CAP = 24
K3_CAP = 30

__all__ = [
    "DEFAULT_CAP",
    "K3_CAP",
    "PackingResult",
    "mu",
    "min_maximal",
    "has_k3_partition",
    "is_packing",
    "is_maximal_packing",
]


@dataclass(frozen=True, slots=True)
class PackingResult:
    """A packing size together with one packing that attains it."""

    size: int
    witness: tuple[VertexSet, ...]

    def to_dict(self) -> dict:
        return {
            "size": self.size,
            "witness": [img.to_list() for img in self.witness],
        }


def _rootless(pattern: Pattern | None) -> Pattern:
    """Packing ignores where a copy was nominated, so drop any root."""
    if pattern is None or pattern.kind != GENERIC:
        return Pattern.unrooted_p3()
    return Pattern.generic(pattern.F, root=None)


def _check_cap(g: Graph, cap: int, what: str) -> None:
    if g.n > cap:
        raise CapExceeded(
            f"{what} is exact and exponential; graph has {g.n} vertices, cap is {cap}"
        )


def _copies_at(g: Graph, pattern: Pattern, avail: int, v: int) -> list[int]:
    return engine.image_masks(g, avail, pattern, v)


def _all_copies(g: Graph, pattern: Pattern, avail: int) -> list[int]:
    """Every copy mask inside ``avail``, each once, enumerated via its lowest
    vertex so the order is deterministic."""
    out = []
    for v in bits_of(avail):
        vbit = 1 << v
        for mask in _copies_at(g, pattern, avail, v):
            if mask & (vbit - 1) == 0:  # v is the lowest vertex of the copy
                out.append(mask)
    return out


def _witness(g: Graph, masks: list[int]) -> tuple[VertexSet, ...]:
    return tuple(VertexSet(mk, g.n) for mk in masks)


def mu(g: Graph, pattern: Pattern | None = None, cap: int = DEFAULT_CAP) -> PackingResult:
    """Maximum number of disjoint pattern copies, with a witness packing."""
    _check_cap(g, cap, "maximum packing")
    if pattern is None or pattern.kind != GENERIC:
        return _mu_p3(g)
    return _mu_generic(g, _rootless(pattern))


def _mu_p3(g: Graph) -> PackingResult:
    kern = kernels.P3Packing(g.adj)
    full = (1 << g.n) - 1
    size = kern.mu(full)
    taken: list[int] = []
    avail = full
    while kern.mu(avail) > 0:
        want = kern.mu(avail)
        for img in kern.copies(avail):
            if 1 + kern.mu(avail & ~img) == want:
                taken.append(img)
                avail &= ~img
                break
    return PackingResult(size, _witness(g, taken))


def _mu_generic(g: Graph, pattern: Pattern) -> PackingResult:
    memo: dict[int, int] = {}

    def nu(avail: int) -> int:
        got = memo.get(avail)
        if got is not None:
            return got
        if avail == 0:
            memo[avail] = 0
            return 0
        vbit = avail & -avail
        v = vbit.bit_length() - 1
        # the lowest vertex is either skipped or covered by some copy
        best = nu(avail ^ vbit)
        for img in _copies_at(g, pattern, avail, v):
            cand = 1 + nu(avail & ~img)
            if cand > best:
                best = cand
        memo[avail] = best
        return best

    full = (1 << g.n) - 1
    size = nu(full)
    taken: list[int] = []
    avail = full
    while nu(avail) > 0:
        want = nu(avail)
        for img in _all_copies(g, pattern, avail):
            if 1 + nu(avail & ~img) == want:
                taken.append(img)
                avail &= ~img
                break
    return PackingResult(size, _witness(g, taken))


def min_maximal(
    g: Graph, pattern: Pattern | None = None, cap: int = DEFAULT_CAP
) -> PackingResult:
    """Minimum size of a maximal (non-extendable) packing, with a witness."""
    _check_cap(g, cap, "minimum maximal packing")
    if pattern is None or pattern.kind != GENERIC:
        kern = kernels.P3Packing(g.adj)
        full = (1 << g.n) - 1
        size = kern.min_maximal(full)
        taken: list[int] = []
        avail = full
        while kern.min_maximal(avail) > 0:
            want = kern.min_maximal(avail)
            for img in kern.copies(avail):
                if 1 + kern.min_maximal(avail & ~img) == want:
                    taken.append(img)
                    avail &= ~img
                    break
        return PackingResult(size, _witness(g, taken))
    return _min_maximal_generic(g, _rootless(pattern))


def _min_maximal_generic(g: Graph, pattern: Pattern) -> PackingResult:
    memo: dict[int, int] = {}

    def mm(avail: int) -> int:
        got = memo.get(avail)
        if got is not None:
            return got
        best = -1
        # maximality is a global property, so every copy must be considered
        for img in _all_copies(g, pattern, avail):
            cand = 1 + mm(avail & ~img)
            if best < 0 or cand < best:
                best = cand
        if best < 0:
            best = 0
        memo[avail] = best
        return best

    full = (1 << g.n) - 1
    size = mm(full)
    taken: list[int] = []
    avail = full
    while mm(avail) > 0:
        want = mm(avail)
        for img in _all_copies(g, pattern, avail):
            if 1 + mm(avail & ~img) == want:
                taken.append(img)
                avail &= ~img
                break
    return PackingResult(size, _witness(g, taken))


def has_k3_partition(g: Graph, cap: int = K3_CAP) -> bool:
    """Whether the vertex set splits into vertex-disjoint triangles.

    A vertex count that is not a multiple of three settles the question
    without any search, so that answer is returned even past the cap; the
    cap guards only the exact recursion.
    """
    if g.n % 3 != 0:
        return False
    _check_cap(g, cap, "triangle partition")
    kern = kernels.P3Packing(g.adj)
    return kern.has_k3_partition((1 << g.n) - 1)


def _is_copy(g: Graph, pattern: Pattern, mask: int) -> bool:
    if mask == 0:
        return False
    v = (mask & -mask).bit_length() - 1
    return mask in engine.image_masks(g, mask, pattern, v)


def is_packing(g: Graph, images: tuple[VertexSet, ...] | list[VertexSet],
               pattern: Pattern | None = None) -> bool:
    """Independent validity check: images pairwise disjoint, each a copy."""
    rootless = _rootless(pattern)
    seen = 0
    for img in images:
        if img.n != g.n:
            raise InvalidInput("witness image sized for a different graph")
        if img.bits & seen:
            return False
        if not _is_copy(g, rootless, img.bits):
            return False
        seen |= img.bits
    return True


def is_maximal_packing(g: Graph, images: tuple[VertexSet, ...] | list[VertexSet],
                       pattern: Pattern | None = None) -> bool:
    """Valid packing whose complement contains no further copy."""
    if not is_packing(g, images, pattern):
        return False
    rootless = _rootless(pattern)
    avail = (1 << g.n) - 1
    for img in images:
        avail &= ~img.bits
    for v in bits_of(avail):
        if engine.image_masks(g, avail, rootless, v):
            return False
    return True
