"""Worklist minimization of partial-transition DFAs.

Two partitions are refined in lockstep: one of the states (the blocks)
and one of the transitions, where a transition set holds the incoming
transitions of one (block, label) pair.  Each round pulls an unprocessed
transition set, marks the tail states of its transitions, and splits
every block that ended up only partially marked.  After a block splits,
the incoming transitions of its smaller half are carved out of their
transition sets and each freshly created set joins the worklist; a set
left whole keeps its index and its worklist status.  Rescanning only the
smaller half bounds the number of times any transition is revisited by
log n, for O(m log n) total work and O(m) memory.
"""

from array import array
from time import perf_counter

from .automaton import MinimizeStats, PtDfa, canonicalize
from .preprocess import bucket_by, empty_dfa, relevant_states, restrict
from .refinable_partition import RefinablePartition
from .splitter_init import init_trp_grouping

__all__ = ["SimpleSet", "Refinement", "minimize", "minimize_with_stats",
           "final_blocks"]


class SimpleSet:
    """Unchecked integer set with O(1) add/remove, stack-backed.

    ``add`` does not test membership; callers guarantee no duplicates
    where it matters.  ``remove`` returns an arbitrary previously added,
    not yet removed number: last-in-first-out normally, queue order with
    ``fifo=True``.
    """

    __slots__ = ("_items", "_taken", "_fifo")

    def __init__(self, fifo: bool = False):
        self._items = array("i")
        self._taken = 0
        self._fifo = fifo

    def add(self, i: int) -> None:
        self._items.append(i)

    def remove(self) -> int:
        if self._fifo:
            v = self._items[self._taken]
            self._taken += 1
            if self._taken == len(self._items):
                del self._items[:]
                self._taken = 0
            return v
        return self._items.pop()

    def empty(self) -> bool:
        return self._taken >= len(self._items)

    def __len__(self) -> int:
        return len(self._items) - self._taken

    def items(self) -> list:
        """Snapshot of the live contents (for tests and debug hooks)."""
        return list(self._items[self._taken:])


class Refinement:
    """Mutable state of one refinement run.

    ``dp`` must already be preprocessed: every state reachable and
    co-reachable, at least one final state.  ``run()`` drives the
    refinement to the fixpoint; the final block of state q is
    ``brp.set_of(q)``.
    """

    def __init__(self, dp: PtDfa, worklist: str = "lifo"):
        if worklist not in ("lifo", "fifo"):
            raise ValueError(f"unknown worklist discipline {worklist!r}")
        self.dp = dp
        self.brp = RefinablePartition(dp.n)
        self.unready = SimpleSet(fifo=(worklist == "fifo"))
        self.touched_blocks = SimpleSet()
        self.touched_spls = SimpleSet()
        self.block_splits = 0
        self.splitter_touches = 0
        self.small_half_touches = 0
        if dp.m:
            self.trp = init_trp_grouping(dp.labels, dp.alpha, compact=True)
            self.in_order, self.in_first, self.in_end = bucket_by(dp.heads, dp.n)
            # Initial transition sets are exactly 0..sets-1, all pending.
            for p in range(self.trp.sets):
                self.unready.add(p)
        else:
            self.trp = None
            self.in_order = self.in_first = self.in_end = None

    def unready_pairs(self) -> set:
        """Live worklist contents as (target block, label) pairs."""
        heads = self.dp.heads
        labels = self.dp.labels
        pairs = set()
        for p in self.unready.items():
            t = self.trp.first_of(p)
            pairs.add((self.brp.set_of(heads[t]), labels[t]))
        return pairs

    def split_block(self, b: int) -> None:
        """Split block ``b`` along its marks and requeue affected
        transition sets.

        A trivial split (nothing or everything marked) only clears the
        marks.  Otherwise the half with fewer states is rescanned, ties
        going to the marked (new) half: its incoming transitions move
        into fresh transition sets, and every fresh set joins the
        worklist.
        """
        brp = self.brp
        b2 = brp.split(b)
        if b2 is None:
            return
        self.block_splits += 1
        if brp.size(b) < brp.size(b2):
            b2 = b
        trp = self.trp
        if trp is None:
            return
        touched = self.touched_spls
        assert touched.empty()
        in_order = self.in_order
        in_first = self.in_first
        in_end = self.in_end
        telems = trp.elems
        tloc = trp.loc
        tsidx = trp.sidx
        tfirst = trp.first
        tmid = trp.mid
        belems = brp.elems
        touched_add = touched.add
        touches = 0
        for posq in range(brp.first[b2], brp.end[b2]):
            q = belems[posq]
            for k in range(in_first[q], in_end[q]):
                t = in_order[k]
                p = tsidx[t]
                if tmid[p] == tfirst[p]:
                    touched_add(p)
                # Mark t inside its transition set (inlined for speed).
                lt = tloc[t]
                mm = tmid[p]
                if lt >= mm:
                    other = telems[mm]
                    telems[lt] = other
                    tloc[other] = lt
                    telems[mm] = t
                    tloc[t] = mm
                    tmid[p] = mm + 1
                touches += 1
        self.small_half_touches += touches
        unready_add = self.unready.add
        trp_split = trp.split
        touched_remove = touched.remove
        while not touched.empty():
            p2 = trp_split(touched_remove())
            if p2 is not None:
                unready_add(p2)

    def run(self, hook=None) -> None:
        """Split off the final states, then refine until the worklist
        drains.  ``hook(self)``, if given, fires at the top of every
        worklist round."""
        dp = self.dp
        brp = self.brp
        for q in sorted(dp.finals):
            brp.mark(q)
        self.split_block(0)
        trp = self.trp
        if trp is None:
            return
        telems = trp.elems
        tfirst = trp.first
        tend = trp.end
        tails = dp.tails
        belems = brp.elems
        bloc = brp.loc
        bsidx = brp.sidx
        bfirst = brp.first
        bmid = brp.mid
        unready = self.unready
        ur_empty = unready.empty
        ur_remove = unready.remove
        touched = self.touched_blocks
        touched_add = touched.add
        touched_empty = touched.empty
        touched_remove = touched.remove
        split_block = self.split_block
        touches = 0
        while not ur_empty():
            assert touched_empty()
            if hook is not None:
                hook(self)
            p = ur_remove()
            for pos in range(tfirst[p], tend[p]):
                q = tails[telems[pos]]
                b = bsidx[q]
                if bmid[b] == bfirst[b]:
                    touched_add(b)
                # Mark q inside its block (inlined for speed).
                lq = bloc[q]
                mm = bmid[b]
                if lq >= mm:
                    other = belems[mm]
                    belems[lq] = other
                    bloc[other] = lq
                    belems[mm] = q
                    bloc[q] = mm
                    bmid[b] = mm + 1
                touches += 1
            while not touched_empty():
                split_block(touched_remove())
        self.splitter_touches += touches

    def release_index(self) -> None:
        """Drop the transition partition, reverse index and worklists
        once the blocks are final, so quotient building runs against a
        smaller live set."""
        self.trp = None
        self.in_order = self.in_first = self.in_end = None
        self.unready = self.touched_blocks = self.touched_spls = None


def _quotient(dp: PtDfa, brp: RefinablePartition) -> PtDfa:
    """Collapse each block to one state, copying the transitions of one
    representative per block."""
    nblocks = brp.sets
    bsidx = brp.sidx
    belems = brp.elems
    bfirst = brp.first
    is_rep = bytearray(dp.n)
    for b in range(nblocks):
        is_rep[belems[bfirst[b]]] = 1
    tails = array("i")
    labels = array("i")
    heads = array("i")
    for t, a, h in zip(dp.tails, dp.labels, dp.heads):
        if is_rep[t]:
            tails.append(bsidx[t])
            labels.append(a)
            heads.append(bsidx[h])
    finals = frozenset(bsidx[q] for q in dp.finals)
    return PtDfa(nblocks, dp.alpha, tails, labels, heads, bsidx[dp.initial],
                 finals)


def _run(d: PtDfa, worklist: str, hook):
    stats = MinimizeStats(n_in=d.n, m_in=d.m, alpha=d.alpha)
    dp = restrict(d, relevant_states(d))
    stats.n_core = dp.n
    stats.m_core = dp.m
    if not dp.finals:
        return dp, None, stats
    ref = Refinement(dp, worklist=worklist)
    ref.run(hook)
    stats.splits = ref.block_splits
    stats.splitter_touches = ref.splitter_touches
    stats.small_half_touches = ref.small_half_touches
    return dp, ref, stats


def minimize_with_stats(d: PtDfa, *, worklist: str = "lifo", loop_hook=None):
    """Minimize ``d`` and report instrumentation.

    Returns ``(out, stats)`` where ``out`` is the canonical minimal
    automaton for the same language: dead states are removed first, an
    empty language yields the one-state empty automaton, and otherwise
    the refined blocks are collapsed to a quotient.  ``worklist`` selects
    the processing order ("lifo" or "fifo"); the result is identical
    either way.
    """
    t0 = perf_counter()
    dp, ref, stats = _run(d, worklist, loop_hook)
    if ref is None:
        out = empty_dfa(d.alpha)
    else:
        ref.release_index()
        out = canonicalize(_quotient(dp, ref.brp))
    stats.n_out = out.n
    stats.m_out = out.m
    stats.seconds = perf_counter() - t0
    return out, stats


def minimize(d: PtDfa, *, worklist: str = "lifo") -> PtDfa:
    """The unique minimal PT-DFA accepting the same language as ``d``,
    in canonical form."""
    return minimize_with_stats(d, worklist=worklist)[0]


def final_blocks(d: PtDfa, *, worklist: str = "lifo", loop_hook=None):
    """Run the refinement without building the quotient.

    Returns ``(dp, blocks, stats)``: the preprocessed automaton, the
    final block index of each of its states (None when the language is
    empty and no refinement ran), and the instrumentation.
    """
    dp, ref, stats = _run(d, worklist, loop_hook)
    blocks = None if ref is None else [ref.brp.set_of(q) for q in range(dp.n)]
    return dp, blocks, stats
