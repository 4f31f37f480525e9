"""A refinable partition of {0, ..., max-1} backed by six flat arrays.

The elements of every set are kept contiguous inside one permutation
array, so membership, size and iteration are O(1), and a set can be
carved in two along its marked prefix without visiting the unmarked
part.  Splitting costs O(marked elements), which amortizes to O(1)
against the mark calls that preceded it.  Sets never merge and elements
never enter or leave the universe; the partition only gets finer.
"""

from array import array

__all__ = ["RefinablePartition"]


class RefinablePartition:
    """Partition of 0..max-1 into numbered, nonempty, disjoint sets.

    Layout: ``elems`` is a permutation of the universe in which each set
    occupies the slice ``[first[s], end[s])``; ``loc`` is the inverse of
    ``elems`` and ``sidx[e]`` is the set index of element ``e``.  The
    marked elements of a set sit in the prefix ``[first[s], mid[s])``.

    Set indices are dense: each successful ``split`` assigns the next
    free index (post-increment of ``sets``).  ``first``, ``mid`` and
    ``end`` are allocated for the worst case of ``max`` singleton sets up
    front, so no operation ever reallocates.

    With ``compact=True`` the six buffers are int32 ``array('i')``
    objects: half the memory of plain lists, slightly slower indexing.

    ``mark`` and ``split`` must not be called on an instance while one of
    its sets is being scanned (they reorder elements within slices).
    Scanning one instance while mutating a different instance is fine.

    ``mark_calls``, ``split_calls`` and ``split_steps`` count the work
    done, so the amortization claim is checkable: the total loop steps of
    all splits never exceed the number of marks.
    """

    __slots__ = ("max", "sets", "elems", "loc", "sidx", "first", "end",
                 "mid", "mark_calls", "split_calls", "split_steps")

    def __init__(self, max_elems: int, compact: bool = False):
        if max_elems < 1:
            raise ValueError("cannot partition an empty universe")
        if compact:
            self.elems = array("i", range(max_elems))
            self.loc = array("i", range(max_elems))
            self.sidx = array("i", [0]) * max_elems
            self.first = array("i", [0]) * max_elems
            self.mid = array("i", [0]) * max_elems
            self.end = array("i", [0]) * max_elems
        else:
            self.elems = list(range(max_elems))
            self.loc = list(range(max_elems))
            self.sidx = [0] * max_elems
            self.first = [0] * max_elems
            self.mid = [0] * max_elems
            self.end = [0] * max_elems
        self.end[0] = max_elems
        self.max = max_elems
        self.sets = 1
        self.mark_calls = 0
        self.split_calls = 0
        self.split_steps = 0

    def size(self, s: int) -> int:
        """Number of elements in set ``s``."""
        assert 0 <= s < self.sets
        return self.end[s] - self.first[s]

    def set_of(self, e: int) -> int:
        """Index of the set containing element ``e``."""
        assert 0 <= e < self.max
        return self.sidx[e]

    def first_of(self, s: int) -> int:
        """Some element of set ``s``; the start of a first_of/next_of scan."""
        assert 0 <= s < self.sets
        return self.elems[self.first[s]]

    def next_of(self, e: int):
        """The element after ``e`` in its set's scan, or None at the end."""
        assert 0 <= e < self.max
        i = self.loc[e] + 1
        if i >= self.end[self.sidx[e]]:
            return None
        return self.elems[i]

    def elements(self, s: int):
        """Iterate the elements of set ``s`` (order unspecified)."""
        e = self.first_of(s)
        while e is not None:
            yield e
            e = self.next_of(e)

    def mark(self, e: int) -> None:
        """Mark ``e`` for the next split of its set; re-marking is a no-op."""
        assert 0 <= e < self.max
        self.mark_calls += 1
        s = self.sidx[e]
        pos = self.loc[e]
        m = self.mid[s]
        if pos >= m:
            elems = self.elems
            other = elems[m]
            elems[pos] = other
            self.loc[other] = pos
            elems[m] = e
            self.loc[e] = m
            self.mid[s] = m + 1

    def no_marks(self, s: int) -> bool:
        """True iff no element of set ``s`` is currently marked."""
        assert 0 <= s < self.sets
        return self.mid[s] == self.first[s]

    def split(self, s: int):
        """Move the marked elements of ``s`` into a fresh set.

        Returns the new set's index, or None when nothing or everything
        in ``s`` was marked, in which case the partition is unchanged.
        Either way all marks of ``s`` are cleared.
        """
        assert 0 <= s < self.sets
        self.split_calls += 1
        first = self.first
        mid = self.mid
        end = self.end
        if mid[s] == end[s]:
            mid[s] = first[s]
        if mid[s] == first[s]:
            return None
        new = self.sets
        self.sets = new + 1
        first[new] = first[s]
        mid[new] = first[s]
        end[new] = mid[s]
        first[s] = mid[s]
        elems = self.elems
        sidx = self.sidx
        for i in range(first[new], end[new]):
            sidx[elems[i]] = new
        self.split_steps += end[new] - first[new]
        return new

    def dump(self) -> str:
        """Debug listing, one line per set: ``index: marked | unmarked``.

        For test fixtures only; the format is not stable.
        """
        lines = []
        for s in range(self.sets):
            f, m, e = self.first[s], self.mid[s], self.end[s]
            marked = " ".join(str(self.elems[i]) for i in range(f, m))
            unmarked = " ".join(str(self.elems[i]) for i in range(m, e))
            lines.append(f"{s}: {marked} | {unmarked}")
        return "\n".join(lines)
