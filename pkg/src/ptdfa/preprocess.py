"""Dead-state removal and the empty-language special case.

A state is worth keeping when it is the initial state, or when it lies
on some path from the initial state to a final state.  Dropping the rest
never changes the language, and afterwards every surviving state has a
nonempty language, which the minimizer's splitting logic relies on.
"""

from array import array

from .automaton import AutomatonError, PtDfa

__all__ = ["InitialNotRetainedError", "bucket_by", "relevant_states",
           "restrict", "empty_dfa"]


class InitialNotRetainedError(AutomatonError):
    """restrict() requires the kept set to contain the initial state."""


def bucket_by(keys, nbins: int):
    """Group indices 0..len(keys)-1 by key with one counting-sort pass.

    Returns (order, first, end): the indices whose key is b occupy
    order[first[b]:end[b]].  O(len(keys) + nbins).
    """
    counts = [0] * nbins
    for k in keys:
        counts[k] += 1
    first = [0] * nbins
    total = 0
    for b in range(nbins):
        first[b] = total
        total += counts[b]
    cursor = first.copy()
    order = array("i", bytes(4 * len(keys)))
    for i, k in enumerate(keys):
        order[cursor[k]] = i
        cursor[k] += 1
    return order, first, cursor


def relevant_states(d: PtDfa) -> set:
    """The initial state plus every state that is both reachable from it
    and able to reach a final state."""
    n = d.n
    tails, heads = d.tails, d.heads

    out_order, out_first, out_end = bucket_by(tails, n)
    fwd = bytearray(n)
    fwd[d.initial] = 1
    stack = [d.initial]
    while stack:
        q = stack.pop()
        for k in range(out_first[q], out_end[q]):
            h = heads[out_order[k]]
            if not fwd[h]:
                fwd[h] = 1
                stack.append(h)

    in_order, in_first, in_end = bucket_by(heads, n)
    bwd = bytearray(n)
    stack = []
    for q in d.finals:
        bwd[q] = 1
        stack.append(q)
    while stack:
        q = stack.pop()
        for k in range(in_first[q], in_end[q]):
            t = tails[in_order[k]]
            if not bwd[t]:
                bwd[t] = 1
                stack.append(t)

    keep = {q for q in range(n) if fwd[q] and bwd[q]}
    keep.add(d.initial)
    return keep


def restrict(d: PtDfa, keep) -> PtDfa:
    """Drop the states outside ``keep`` and every transition touching
    them; survivors are renumbered densely in ascending order."""
    keep = set(keep)
    if d.initial not in keep:
        raise InitialNotRetainedError(
            f"initial state {d.initial} not in the retained set")
    if len(keep) == d.n:
        return d
    new_of = [-1] * d.n
    count = 0
    for q in range(d.n):
        if q in keep:
            new_of[q] = count
            count += 1
    tails = array("i")
    labels = array("i")
    heads = array("i")
    for t, a, h in zip(d.tails, d.labels, d.heads):
        if new_of[t] >= 0 and new_of[h] >= 0:
            tails.append(new_of[t])
            labels.append(a)
            heads.append(new_of[h])
    finals = frozenset(new_of[q] for q in d.finals if new_of[q] >= 0)
    return PtDfa(count, d.alpha, tails, labels, heads, new_of[d.initial], finals)


def empty_dfa(alpha: int) -> PtDfa:
    """The smallest automaton over the given alphabet accepting nothing:
    one non-final initial state and no transitions."""
    return PtDfa(1, alpha, array("i"), array("i"), array("i"), 0, frozenset())
