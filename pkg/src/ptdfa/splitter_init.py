"""Initial grouping of transitions by label into a refinable partition.

Refinement starts from one transition set per label.  Two builders:

* ``init_trp_presorted`` assumes equal labels arrive contiguously and
  uses only the partition's own mark/split machinery, touching no
  per-label storage.
* ``init_trp_grouping`` handles any input order in O(m) time using a
  label-indexed scratch array whose prior contents are never trusted:
  every lookup is validated before use, so a recycled (even garbage)
  buffer cannot corrupt the grouping.
"""

from .automaton import AutomatonError
from .refinable_partition import RefinablePartition

__all__ = ["PresortViolationError", "init_trp_presorted", "init_trp_grouping"]


class PresortViolationError(AutomatonError):
    """A label recurred non-contiguously in presorted input."""


def init_trp_presorted(labels, compact: bool = True) -> RefinablePartition:
    """One partition set per distinct label, for label-contiguous input.

    Runs of equal labels are marked and split off one by one; the final
    run stays behind as set 0.  Raises :class:`PresortViolationError` if
    some label shows up again after its run ended.
    """
    m = len(labels)
    if m == 0:
        raise ValueError("no transitions to partition")
    rp = RefinablePartition(m, compact=compact)
    seen = set()
    i = 0
    while i < m:
        a = labels[i]
        if a in seen:
            raise PresortViolationError(
                f"label {a} recurs non-contiguously at transition {i}")
        seen.add(a)
        j = i
        while j < m and labels[j] == a:
            rp.mark(j)
            j += 1
        rp.split(0)
        i = j
    return rp


def init_trp_grouping(labels, alpha: int, scratch=None,
                      compact: bool = True) -> RefinablePartition:
    """One partition set per distinct label, any input order.

    Counts each label's occurrences, lays the groups out back to back,
    then places every transition, all in O(m) time plus the single
    O(alpha) scratch allocation.  ``scratch`` may be any int buffer of
    length >= alpha; its existing contents are ignored semantically (a
    stale entry must both point inside the groups built so far and name
    this exact label to be believed, which a foreign value cannot).
    The partition's own mid/end fields serve as counters during
    construction; all invariants hold again on return.
    """
    m = len(labels)
    if m == 0:
        raise ValueError("no transitions to partition")
    if scratch is None:
        scratch = [0] * alpha
    elif len(scratch) < alpha:
        raise ValueError("scratch buffer shorter than the alphabet")
    rp = RefinablePartition(m, compact=compact)
    first = rp.first
    mid = rp.mid
    end = rp.end
    sets = 0
    for t in range(m):
        a = labels[t]
        if not 0 <= a < alpha:
            raise AutomatonError(f"label {a} out of range 0..{alpha - 1}")
        i = scratch[a]
        if i < 0 or i >= sets or mid[i] != a:
            i = sets
            sets += 1
            scratch[a] = i
            mid[i] = a
            end[i] = 1
        else:
            end[i] += 1
    first[0] = 0
    mid[0] = end[0]
    for i in range(1, sets):
        first[i] = end[i - 1]
        end[i] = first[i] + end[i]
        mid[i] = end[i]
    elems = rp.elems
    loc = rp.loc
    sidx = rp.sidx
    for t in range(m):
        i = scratch[labels[t]]
        pos = mid[i] - 1
        mid[i] = pos
        elems[pos] = t
        loc[t] = pos
        sidx[t] = i
    rp.sets = sets
    return rp
