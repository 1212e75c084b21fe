"""Pure-Python closed-pattern enumeration kernel.

Sets are Python ints used as bitmasks: bit ``i`` set iff member ``i``
belongs to the set.  Enumeration uses prefix-preserving closure extension
(LCM style), which visits every closed attribute set exactly once without
storing previously seen patterns.

The compiled kernel in ``_lcm_cy`` implements the same contract; the two
must stay interchangeable.
"""

from ..errors import CapacityError


def root_state(cols, n_objects, min_extent):
    """Closure of the empty itemset, or None if its extent is too small."""
    extent = (1 << n_objects) - 1
    if extent.bit_count() < min_extent:
        return None
    intent = 0
    for k in range(len(cols)):
        if extent & ~cols[k] == 0:
            intent |= 1 << k
    return extent, intent, -1


def child_states(cols, state, min_extent):
    """Prefix-preserving closure extensions of a closed pattern.

    Returns the child states in ascending order of the extending
    attribute.  A child whose closure changes the intent below the
    extending attribute belongs to a different branch and is skipped.
    """
    m = len(cols)
    extent, intent, core = state
    children = []
    for j in range(core + 1, m):
        if intent >> j & 1:
            continue
        child_extent = extent & cols[j]
        if child_extent.bit_count() < min_extent:
            continue
        child_intent = 0
        for k in range(m):
            if child_extent & ~cols[k] == 0:
                child_intent |= 1 << k
        if (child_intent ^ intent) & ((1 << j) - 1):
            continue
        children.append((child_extent, child_intent, j))
    return children


def closed_patterns(cols, n_objects, min_extent, budget=None, start=None):
    """Enumerate closed attribute sets whose extent holds >= min_extent objects.

    cols        per-attribute object bitmasks
    n_objects   number of objects in the context
    min_extent  minimum extent size (>= 1, so the empty extent is pruned)
    budget      optional cap on the number of enumerated patterns
    start       optional state triple: enumerate only the subtree rooted at
                that closed pattern, the pattern itself included

    Returns a list of (extent_mask, intent_mask) pairs in depth-first
    order.  Raises CapacityError as soon as the budget is exceeded.
    """
    if start is None:
        start = root_state(cols, n_objects, min_extent)
        if start is None:
            return []
    out = []
    stack = [start]
    while stack:
        state = stack.pop()
        out.append(state[:2])
        if budget is not None and len(out) > budget:
            raise CapacityError(f"closed-pattern budget of {budget} exceeded")
        stack.extend(reversed(child_states(cols, state, min_extent)))
    return out
