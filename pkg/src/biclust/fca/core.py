"""Formal contexts, Galois operators, and formal-concept enumeration."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..errors import CapacityError
from . import _lcm_py

try:
    from . import _lcm_cy
except ImportError:  # compiled kernel is optional
    _lcm_cy = None


def _select_kernel():
    choice = os.environ.get("BICLUST_KERNEL", "").strip().lower()
    if choice in {"c", "cy", "cython", "compiled"}:
        if _lcm_cy is None:
            raise RuntimeError(
                "BICLUST_KERNEL requests the compiled kernel but it is not built"
            )
        return _lcm_cy
    if choice in {"py", "python", "pure"}:
        return _lcm_py
    return _lcm_cy if _lcm_cy is not None else _lcm_py


_KERNEL = _select_kernel()


def kernel_name() -> str:
    """Name of the mining kernel selected at import time."""
    return "cython" if _KERNEL is _lcm_cy else "python"


def _mask_of(indices: Iterable[int], size: int, what: str) -> int:
    mask = 0
    for i in indices:
        if not 0 <= i < size:
            raise IndexError(f"{what} index {i} out of range [0, {size})")
        mask |= 1 << i
    return mask


def _indices(mask: int) -> frozenset[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


class BinaryContext:
    """Objects x attributes boolean relation with dual bitset indexes.

    Immutable after construction; all query methods are safe to call
    concurrently.
    """

    __slots__ = ("object_ids", "attribute_ids", "_cols", "_rows")

    def __init__(
        self,
        object_ids: Iterable[str],
        attribute_ids: Iterable[str],
        rows: Iterable[Iterable[object]],
    ):
        self.object_ids = tuple(object_ids)
        self.attribute_ids = tuple(attribute_ids)
        n, m = len(self.object_ids), len(self.attribute_ids)
        row_masks = []
        col_masks = [0] * m
        for i, row in enumerate(rows):
            row = list(row)
            if len(row) != m:
                raise ValueError(
                    f"row {i} has {len(row)} cells, expected {m}"
                )
            mask = 0
            for j, cell in enumerate(row):
                if cell:
                    mask |= 1 << j
                    col_masks[j] |= 1 << i
            row_masks.append(mask)
        if len(row_masks) != n:
            raise ValueError(
                f"{len(row_masks)} rows given for {n} object ids"
            )
        self._rows = tuple(row_masks)
        self._cols = tuple(col_masks)

    @classmethod
    def from_raw(cls, raw) -> "BinaryContext":
        """Build from an io.RawBinaryContext."""
        return cls(raw.object_ids, raw.attribute_ids, raw.relation)

    @property
    def n_objects(self) -> int:
        return len(self.object_ids)

    @property
    def n_attributes(self) -> int:
        return len(self.attribute_ids)

    def has(self, obj: int, attr: int) -> bool:
        return bool(self._rows[obj] >> attr & 1)

    def intent_of(self, objects: Iterable[int]) -> frozenset[int]:
        """Attributes common to all given objects; all attributes for the empty set."""
        mask = _mask_of(objects, self.n_objects, "object")
        return _indices(self._intent_mask(mask))

    def extent_of(self, attributes: Iterable[int]) -> frozenset[int]:
        """Objects containing all given attributes; all objects for the empty set."""
        mask = _mask_of(attributes, self.n_attributes, "attribute")
        return _indices(self._extent_mask(mask))

    def close_itemset(self, attributes: Iterable[int]) -> frozenset[int]:
        """Galois closure of an attribute set: common attributes of its extent."""
        mask = _mask_of(attributes, self.n_attributes, "attribute")
        return _indices(self._intent_mask(self._extent_mask(mask)))

    def close_objset(self, objects: Iterable[int]) -> frozenset[int]:
        """Galois closure of an object set: common objects of its intent."""
        mask = _mask_of(objects, self.n_objects, "object")
        return _indices(self._extent_mask(self._intent_mask(mask)))

    # mask-level operators, shared with measures and rule mining
    def _intent_mask(self, object_mask: int) -> int:
        intent = 0
        for k, col in enumerate(self._cols):
            if object_mask & ~col == 0:
                intent |= 1 << k
        return intent

    def _extent_mask(self, attribute_mask: int) -> int:
        extent = (1 << self.n_objects) - 1
        rest = attribute_mask
        while rest:
            low = rest & -rest
            extent &= self._cols[low.bit_length() - 1]
            rest ^= low
        return extent


@dataclass(frozen=True)
class FormalConcept:
    """A maximal all-ones rectangle: mutually corresponding extent and intent."""

    extent: frozenset[int]
    intent: frozenset[int]

    def sort_key(self) -> tuple[int, ...]:
        return tuple(sorted(self.intent))


def enumerate_concepts(
    context: BinaryContext,
    min_extent: int = 1,
    min_intent: int = 1,
    *,
    budget: int | None = None,
    jobs: int = 1,
) -> list[FormalConcept]:
    """All formal concepts with |extent| >= min_extent and |intent| >= min_intent.

    Concepts are returned in lexicographic order of their sorted intent,
    so the output does not depend on the kernel or on ``jobs``.  Raises
    CapacityError when the enumeration exceeds ``budget`` closed patterns.
    """
    if min_extent < 1:
        raise ValueError("min_extent must be >= 1")
    if min_intent < 1:
        raise ValueError("min_intent must be >= 1")
    cols = list(context._cols)
    n = context.n_objects
    if jobs > 1:
        pairs = _closed_patterns_parallel(cols, n, min_extent, budget, jobs)
    else:
        pairs = _KERNEL.closed_patterns(cols, n, min_extent, budget)
    concepts = [
        FormalConcept(_indices(extent), _indices(intent))
        for extent, intent in pairs
        if intent.bit_count() >= min_intent
    ]
    concepts.sort(key=FormalConcept.sort_key)
    return concepts


def _closed_patterns_parallel(cols, n_objects, min_extent, budget, jobs):
    """Fan the enumeration out across first-attribute branches.

    Subtrees are independent, so any scheduling yields the same merged
    set; the caller re-sorts, making the result schedule-independent.
    """
    root = _lcm_py.root_state(cols, n_objects, min_extent)
    if root is None:
        return []
    firsts = _lcm_py.child_states(cols, root, min_extent)
    pairs = [root[:2]]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [
            pool.submit(_KERNEL.closed_patterns, cols, n_objects, min_extent, budget, s)
            for s in firsts
        ]
        for fut in futures:
            pairs.extend(fut.result())
    if budget is not None and len(pairs) > budget:
        raise CapacityError(f"closed-pattern budget of {budget} exceeded")
    return pairs
