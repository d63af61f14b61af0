"""Minimal Richardson orbits above a given orbit in the dominance order.

The construction scans the zero-padded part sequence for *witness* pairs of
equal even entries (at even/odd position pairs fixed per family), attributes
each accepted witness to the block containing it, and reassembles the
partition with the witnessed block raised, earlier blocks split, and later
blocks lowered.  Collapsing each reassembly yields exactly the minimal
Richardson orbits dominating the input.
"""
from __future__ import annotations

from dataclasses import dataclass

from .blocks import Block, BlockDecomposition, ModifiedBlocks, _desc, decompose, is_richardson
from .levi import LeviType, polarizations
from .partitions import Family, Partition, collapse, dominance_leq, enumerate_valid


def modify_block(block: Block, family: Family) -> ModifiedBlocks:
    """The raise/lower/split variants of one block."""
    if block.family is not family:
        raise ValueError(f"block {block.kind} does not belong to family {family.value}")
    return block.modifications()


@dataclass(frozen=True)
class IndexEntry:
    """One accepted witness: 1-based block index (``n_blocks + 1`` denotes
    the virtual block past the end) and the 1-based witness position l."""

    block: int
    witness: int


@dataclass(frozen=True)
class IndexSet:
    """All accepted witnesses for a partition, in scan order."""

    entries: tuple[IndexEntry, ...]
    n_blocks: int

    def __post_init__(self) -> None:
        bs = [e.block for e in self.entries]
        ls = [e.witness for e in self.entries]
        if any(bs[i] >= bs[i + 1] for i in range(len(bs) - 1)):
            raise ValueError("witness blocks must strictly increase")
        if any(ls[i] >= ls[i + 1] for i in range(len(ls) - 1)):
            raise ValueError("witness positions must strictly increase")


def index_set(p: Partition, family: Family) -> IndexSet:
    """Scan for witnesses in the zero-padded part sequence.

    A witness at position l is an equal even pair ``d[2l] == d[2l+1]``
    (``d[2l-1] == d[2l]`` in family D).  After the first, a witness is
    accepted only if it lies in a strictly later block and an equal odd
    separator pair occurs strictly between it and the previous acceptance.
    Padding past the parts belongs to the final block in family B and to the
    virtual block past the end otherwise; an omitted C2 closing boundary
    still owns one slot of its block.
    """
    d = decompose(p, family)
    blocks = d.blocks
    m = len(blocks)
    owner: dict[int, int] = {}
    pos = 1
    for bi, blk in enumerate(blocks):
        span = len(blk.parts())
        if blk.kind == "C2" and len(blk.betas) == 1:
            span += 1
        for _ in range(span):
            owner[pos] = bi
            pos += 1
    parts = p.parts

    def val(i: int) -> int:
        return parts[i - 1] if 1 <= i <= len(parts) else 0

    def block_of(i: int) -> int:
        if i in owner:
            return owner[i]
        return m - 1 if family is Family.B else m

    woff = -1 if family is Family.D else 0
    raw_entries: list[tuple[int, int]] = []
    last_l = 0
    for l in range(1, len(parts) // 2 + 3):
        i1 = 2 * l + woff
        if val(i1) != val(i1 + 1) or val(i1) % 2 != 0:
            continue
        b = block_of(i1)
        if not raw_entries:
            ok = True
        else:
            ok = b > raw_entries[-1][0] and any(
                val(2 * lp + 1 + woff) == val(2 * lp + 2 + woff)
                and val(2 * lp + 1 + woff) % 2 == 1
                for lp in range(last_l + 1, l)
            )
        if ok:
            raw_entries.append((b, l))
            last_l = l
        if b >= m or (family is Family.B and val(i1) == 0):
            break
    return IndexSet(tuple(IndexEntry(b + 1, l) for b, l in raw_entries), m)


def _assemble(d: BlockDecomposition, block0: int) -> tuple[int, ...]:
    """Reassembly for a witness in 0-based block ``block0`` (``>= n_blocks``
    meaning the virtual block: split everything)."""
    mods = [blk.modifications() for blk in d.blocks]
    merged: list[int] = []
    if block0 >= len(mods):
        for mb in mods:
            merged += mb.double_prime
    else:
        for mb in mods[:block0]:
            merged += mb.double_prime
        pivot = mods[block0].circ
        if pivot is None:
            raise AssertionError(f"witnessed block {d.blocks[block0].kind} has no raising variant")
        merged += pivot
        for mb in mods[block0 + 1 :]:
            merged += mb.prime
    return _desc(merged)


def _witnessed_raws(p: Partition, family: Family) -> list[tuple[IndexEntry, tuple[int, ...]]]:
    d = decompose(p, family)
    idx = index_set(p, family)
    return [(e, _assemble(d, e.block - 1)) for e in idx.entries]


def minimal_richardson_orbits(p: Partition, family: Family) -> list[Partition]:
    """The minimal Richardson orbits dominating ``p``, in witness order."""
    out: list[Partition] = []
    for _, raw in _witnessed_raws(p, family):
        r = collapse(Partition(raw), family)
        if r not in out:
            out.append(r)
    return out


def minimal_richardson_witnessed(
    p: Partition, family: Family
) -> list[tuple[Partition, IndexEntry]]:
    """Minimal Richardson orbits paired with the witness that produced each
    (first witness wins when two produce the same orbit)."""
    out: list[tuple[Partition, IndexEntry]] = []
    seen: set[tuple[int, ...]] = set()
    for entry, raw in _witnessed_raws(p, family):
        r = collapse(Partition(raw), family)
        if r.parts not in seen:
            seen.add(r.parts)
            out.append((r, entry))
    return out


def pseudo_polarizations(p: Partition, family: Family) -> list[tuple[Partition, LeviType]]:
    """Every (R, L) with R a minimal Richardson orbit over ``p`` and L a
    polarization of R, in (witness order, polarization order)."""
    return [
        (r, levi)
        for r in minimal_richardson_orbits(p, family)
        for levi in polarizations(r, family)
    ]


def minimal_richardson_bruteforce(p: Partition, family: Family) -> list[Partition]:
    """Reference computation: filter every valid partition for the
    Richardson property and dominance over ``p``, then keep the minimal
    elements.  Exponential in spirit; for cross-checking only."""
    above = [
        r
        for r in enumerate_valid(p.n, family)
        if dominance_leq(p, r) and is_richardson(r, family)
    ]
    return [
        r
        for r in above
        if not any(s != r and dominance_leq(s, r) for s in above)
    ]
