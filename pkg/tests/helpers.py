"""Shared test utilities: a naive reference partition, brute-force
language tools, and the exhaustive tiny-automaton sweep."""

from dataclasses import dataclass, field
from functools import lru_cache

from ptdfa import PtDfa, hopcroft_minimize, minimize_with_stats
from ptdfa.oracle import oracle_minimize


def check_partition(rp):
    """Assert every structural invariant of a refinable partition."""
    seen = bytearray(rp.max)
    covered = 0
    for s in range(rp.sets):
        f, m, e = rp.first[s], rp.mid[s], rp.end[s]
        assert 0 <= f <= m <= e <= rp.max
        assert f < e, "sets are nonempty"
        for i in range(f, e):
            el = rp.elems[i]
            assert 0 <= el < rp.max
            assert not seen[el], "set slices overlap"
            seen[el] = 1
            assert rp.loc[el] == i, "loc must invert elems"
            assert rp.sidx[el] == s
        covered += e - f
    assert covered == rp.max, "set slices cover the universe"


class ModelPartition:
    """Naive reference model: explicit element sets plus marked subsets."""

    def __init__(self, max_elems):
        self.max = max_elems
        self.members = [set(range(max_elems))]
        self.marked = [set()]
        self.owner = [0] * max_elems

    def size(self, s):
        return len(self.members[s])

    def set_of(self, e):
        return self.owner[e]

    def no_marks(self, s):
        return not self.marked[s]

    def mark(self, e):
        self.marked[self.owner[e]].add(e)

    def split(self, s):
        mk = self.marked[s]
        self.marked[s] = set()
        if not mk or len(mk) == len(self.members[s]):
            return None
        new = len(self.members)
        self.members[s] -= mk
        self.members.append(mk)
        self.marked.append(set())
        for e in mk:
            self.owner[e] = new
        return new


def assert_agrees(rp, model):
    """The partition and the model describe identical set families."""
    assert rp.sets == len(model.members)
    for s in range(rp.sets):
        f, m, e = rp.first[s], rp.mid[s], rp.end[s]
        assert {rp.elems[i] for i in range(f, e)} == model.members[s]
        assert {rp.elems[i] for i in range(f, m)} == model.marked[s]


def all_words(alpha, max_len):
    """Every word over 0..alpha-1 up to the given length, shortest first."""
    words = [()]
    frontier = [()]
    for _ in range(max_len):
        frontier = [w + (a,) for w in frontier for a in range(alpha)]
        words.extend(frontier)
    return words


def word_run(step, q, word, finals):
    for a in word:
        q = step.get((q, a))
        if q is None:
            return False
    return q in finals


def language_fingerprint(d, q0, max_len):
    """The set of words of bounded length accepted from state q0."""
    step = d.transition_map()
    return frozenset(w for w in all_words(d.alpha, max_len)
                     if word_run(step, q0, w, d.finals))


def brute_relevant(d):
    """Independent relevant-state computation: dict-based forward
    reachability plus a plain backward fixpoint over the triples."""
    step = d.transition_map()
    seen = {d.initial}
    stack = [d.initial]
    while stack:
        q = stack.pop()
        for a in range(d.alpha):
            h = step.get((q, a))
            if h is not None and h not in seen:
                seen.add(h)
                stack.append(h)
    alive = set(d.finals)
    for _ in range(d.n):
        alive |= {t for t, _, h in d.transitions() if h in alive}
    rel = {q for q in seen if q in alive}
    rel.add(d.initial)
    return rel


def minimal_sizes_by_enumeration(d):
    """(states, transitions) of the minimal automaton, computed by
    bucketing relevant states on their bounded-word languages.

    Words up to length 2n are enough to separate any two states with
    different languages at this size.
    """
    rel = brute_relevant(d)
    if not (rel & d.finals):
        return 1, 0
    fps = {q: language_fingerprint(d, q, 2 * d.n) for q in rel}
    classes = {}
    for q in sorted(rel):
        classes.setdefault(fps[q], []).append(q)
    step = d.transition_map()
    m_min = 0
    for members in classes.values():
        rep = members[0]
        for a in range(d.alpha):
            h = step.get((rep, a))
            if h is not None and h in rel:
                m_min += 1
    return len(classes), m_min


def worklist_invariant_ok(ref):
    """Brute-force check of the refinement loop invariant: same-block
    states either agree on the block of their a-successor, or that
    successor block is still paired with a in the worklist."""
    dp = ref.dp
    step = dp.transition_map()
    pending = ref.unready_pairs()
    block = [ref.brp.set_of(q) for q in range(dp.n)]
    for q1 in range(dp.n):
        for q2 in range(q1 + 1, dp.n):
            if block[q1] != block[q2]:
                continue
            for a in range(dp.alpha):
                h1 = step.get((q1, a))
                h2 = step.get((q2, a))
                b1 = None if h1 is None else block[h1]
                b2 = None if h2 is None else block[h2]
                if b1 == b2:
                    continue
                if b1 is not None and (b1, a) in pending:
                    continue
                if b2 is not None and (b2, a) in pending:
                    continue
                return False
    return True


def final_partition_violations(dp, blocks, lang_cls):
    """Count violations of the two final-partition conditions.

    (a) states with equal languages must share a block; (b) states in
    one block must send every symbol to one block (missing transitions
    matching missing transitions).
    """
    violations = 0
    blocks_of_class = {}
    for q, c in enumerate(lang_cls):
        blocks_of_class.setdefault(c, set()).add(blocks[q])
    violations += sum(1 for s in blocks_of_class.values() if len(s) > 1)
    step = dp.transition_map()
    members_of = {}
    for q, b in enumerate(blocks):
        members_of.setdefault(b, []).append(q)
    for members in members_of.values():
        for a in range(dp.alpha):
            succ = set()
            for q in members:
                h = step.get((q, a))
                succ.add(None if h is None else blocks[h])
            if len(succ) > 1:
                violations += 1
    return violations


def iter_tiny_dfas():
    """Every PT-DFA with n <= 3, alpha <= 2 and initial state 0: all
    partial transition functions, all final-state sets."""
    for n in (1, 2, 3):
        for alpha in (1, 2):
            cells = n * alpha
            for code in range((n + 1) ** cells):
                triples = []
                c = code
                for cell in range(cells):
                    h = c % (n + 1)
                    c //= n + 1
                    if h:
                        triples.append((cell // alpha, cell % alpha, h - 1))
                for fmask in range(2 ** n):
                    finals = frozenset(q for q in range(n) if fmask >> q & 1)
                    yield PtDfa.from_triples(n, alpha, triples, 0, finals)


@dataclass
class TinyReport:
    total: int = 0
    iso_mismatches: int = 0
    bound_violations: int = 0
    enum_mismatches: int = 0
    failures: list = field(default_factory=list)


@lru_cache(maxsize=1)
def tiny_sweep_report() -> TinyReport:
    """Run all three minimizers plus the enumeration count over the
    exhaustive tiny sweep once per test session."""
    report = TinyReport()
    for d in iter_tiny_dfas():
        report.total += 1
        out_v, stats = minimize_with_stats(d)
        out_o = oracle_minimize(d)
        out_h, _ = hopcroft_minimize(d)
        if not (out_v == out_o == out_h):
            report.iso_mismatches += 1
            if len(report.failures) < 5:
                report.failures.append(("iso", d))
        if not stats.within_scan_bounds():
            report.bound_violations += 1
            if len(report.failures) < 5:
                report.failures.append(("bounds", d))
        if (out_o.n, out_o.m) != minimal_sizes_by_enumeration(d):
            report.enum_mismatches += 1
            if len(report.failures) < 5:
                report.failures.append(("enum", d))
    return report
