"""PT-DFA values, validation, the text format, and canonical renumbering.

A PT-DFA is a deterministic finite automaton whose transition function
may be partial: a missing (state, label) entry simply kills the run.
States are 0..n-1, labels are 0..alpha-1.  Transitions are held as three
parallel int32 arrays (tail, label, head); the triple view is the API
boundary.  Values are immutable once built and safe to share.
"""

from array import array
from dataclasses import dataclass

__all__ = [
    "AutomatonError", "ValidationError", "ParseError", "UnreachableStateError",
    "PtDfa", "MinimizeStats",
    "validate", "parse", "serialize", "canonicalize", "is_isomorphic", "accepts",
]


class AutomatonError(ValueError):
    """Base class for bad automata and bad automaton text."""


class ValidationError(AutomatonError):
    """One or more structural problems in a raw automaton description."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(self.diagnostics))


class ParseError(AutomatonError):
    """Malformed automaton text; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class UnreachableStateError(AutomatonError):
    """Canonical renumbering needs every state reachable from the start."""


@dataclass(frozen=True)
class PtDfa:
    """A validated partial-transition DFA.

    Instances built through :func:`validate` or :func:`parse` are known
    deterministic and in-range.  Code constructing PtDfa directly is
    responsible for those invariants.
    """

    n: int
    alpha: int
    tails: array
    labels: array
    heads: array
    initial: int
    finals: frozenset

    @property
    def m(self) -> int:
        """Number of defined transitions."""
        return len(self.tails)

    def transitions(self) -> list:
        """The transitions as (tail, label, head) triples."""
        return list(zip(self.tails, self.labels, self.heads))

    def transition_map(self) -> dict:
        """Dict view {(tail, label): head} of the partial function."""
        return {
            (t, a): h
            for t, a, h in zip(self.tails, self.labels, self.heads)
        }

    @classmethod
    def from_triples(cls, n, alpha, triples, initial, finals) -> "PtDfa":
        """Build without validation from an iterable of triples."""
        tails = array("i")
        labels = array("i")
        heads = array("i")
        for t, a, h in triples:
            tails.append(t)
            labels.append(a)
            heads.append(h)
        return cls(n, alpha, tails, labels, heads, initial, frozenset(finals))

    def __repr__(self):
        return (f"PtDfa(n={self.n}, alpha={self.alpha}, m={self.m}, "
                f"k={len(self.finals)}, initial={self.initial})")


def validate(n, alpha, transitions, initial, finals) -> PtDfa:
    """Check a raw description and return the PtDfa.

    Raises :class:`ValidationError` carrying one diagnostic per problem:
    a duplicate (tail, label) key (nondeterminism), an index out of
    range, or an empty state set.  Each diagnostic names the offending
    record.
    """
    diags = []
    if n < 1:
        diags.append(f"empty state set (n={n})")
    if alpha < 0:
        diags.append(f"negative alphabet size ({alpha})")
    if n >= 1 and not 0 <= initial < n:
        diags.append(f"initial state {initial} out of range 0..{n - 1}")
    finals = frozenset(finals)
    for q in sorted(finals):
        if not 0 <= q < n:
            diags.append(f"final state {q} out of range 0..{n - 1}")
    triples = [(int(t), int(a), int(h)) for t, a, h in transitions]
    seen = set()
    for i, (t, a, h) in enumerate(triples):
        if not 0 <= t < n:
            diags.append(f"tail {t} out of range in transition #{i}")
        if not 0 <= a < alpha:
            diags.append(f"label {a} out of range in transition #{i}")
        if not 0 <= h < n:
            diags.append(f"head {h} out of range in transition #{i}")
        key = (t, a)
        if key in seen:
            diags.append(
                f"duplicate transition key (tail={t}, label={a}) at transition #{i}")
        seen.add(key)
    if diags:
        raise ValidationError(diags)
    return PtDfa.from_triples(n, alpha, triples, initial, finals)


def _int_token(token: str, lineno: int) -> int:
    try:
        return int(token, 10)
    except ValueError:
        raise ParseError(lineno, f"expected an integer, got {token!r}") from None


def parse(text: str) -> PtDfa:
    """Parse the automaton text format.

    Line 1: ``dfa <n> <alpha> <m> <k> <initial>``, then m lines
    ``<tail> <label> <head>``, then k lines ``<final-state>``.  Numbers
    are ASCII decimal, states 0-based.  Lines starting with ``#`` are
    comments; blank lines are ignored.  Raises :class:`ParseError` with a
    line number on syntax problems and :class:`ValidationError` on
    structural ones.
    """
    rows = []
    last_line = 0
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append((lineno, stripped.split()))
        last_line = lineno
    if not rows:
        raise ParseError(1, "missing header line")
    lineno, header = rows[0]
    if len(header) != 6 or header[0] != "dfa":
        raise ParseError(lineno, "header must be 'dfa <n> <alpha> <m> <k> <initial>'")
    n, alpha, m, k, initial = (_int_token(tok, lineno) for tok in header[1:])
    if m < 0 or k < 0:
        raise ParseError(lineno, "negative transition or final count")
    if len(rows) != 1 + m + k:
        raise ParseError(last_line,
                         f"expected {m} transition and {k} final-state lines, "
                         f"found {len(rows) - 1} data lines")
    triples = []
    for lineno, tokens in rows[1:1 + m]:
        if len(tokens) != 3:
            raise ParseError(lineno, "transition line must be '<tail> <label> <head>'")
        triples.append(tuple(_int_token(tok, lineno) for tok in tokens))
    finals = []
    for lineno, tokens in rows[1 + m:]:
        if len(tokens) != 1:
            raise ParseError(lineno, "final-state line must be a single state")
        finals.append(_int_token(tokens[0], lineno))
    return validate(n, alpha, triples, initial, finals)


def serialize(d: PtDfa) -> str:
    """Emit the bit-exact canonical text: transitions sorted by
    (tail, label, head), final states ascending, LF line endings."""
    tails, labels, heads = d.tails, d.labels, d.heads
    order = sorted(range(d.m), key=lambda i: (tails[i], labels[i], heads[i]))
    lines = [f"dfa {d.n} {d.alpha} {d.m} {len(d.finals)} {d.initial}"]
    for i in order:
        lines.append(f"{tails[i]} {labels[i]} {heads[i]}")
    for q in sorted(d.finals):
        lines.append(str(q))
    return "\n".join(lines) + "\n"


def _counting_sort(order, keys, bins: int) -> array:
    """Stable counting sort of transition indices by keys[i].

    ``order`` is an existing index ordering (or None for 0..m-1).
    Returns a fresh int32 index array; only small count lists are
    allocated besides it.
    """
    counts = [0] * (bins + 1)
    if order is None:
        for k in keys:
            counts[k + 1] += 1
    else:
        for i in order:
            counts[keys[i] + 1] += 1
    for b in range(bins):
        counts[b + 1] += counts[b]
    out = array("i", bytes(4 * len(keys)))
    for i in (range(len(keys)) if order is None else order):
        k = keys[i]
        out[counts[k]] = i
        counts[k] += 1
    return out


def canonicalize(d: PtDfa) -> PtDfa:
    """Renumber states breadth-first from the initial state, exploring
    labels in ascending order.

    The result is the unique representative of the automaton's
    isomorphism class, so two automata are isomorphic exactly when their
    canonical forms are equal.  Requires every state to be reachable;
    raises :class:`UnreachableStateError` otherwise.
    """
    n, alpha, m = d.n, d.alpha, d.m
    tails, labels, heads = d.tails, d.labels, d.heads
    initial, old_finals = d.initial, d.finals
    d = None  # allow a caller-temporary input to be freed early

    # Per-tail transition slices with labels ascending.
    order = _counting_sort(_counting_sort(None, labels, alpha), tails, n)
    start = [0] * (n + 1)
    for t in tails:
        start[t + 1] += 1
    for q in range(n):
        start[q + 1] += start[q]

    new_of = [-1] * n
    new_of[initial] = 0
    bfs = [initial]
    for q in bfs:
        for k in range(start[q], start[q + 1]):
            h = heads[order[k]]
            if new_of[h] < 0:
                new_of[h] = len(bfs)
                bfs.append(h)
    if len(bfs) != n:
        raise UnreachableStateError(
            f"{n - len(bfs)} state(s) unreachable from the initial state")
    del order, start, bfs

    nt = array("i", bytes(4 * m))
    nl = array("i", bytes(4 * m))
    nh = array("i", bytes(4 * m))
    for t in range(m):
        nt[t] = new_of[tails[t]]
        nl[t] = labels[t]
        nh[t] = new_of[heads[t]]
    tails = labels = heads = None

    # Sort by (tail, label, head) with three stable passes, least
    # significant key first.
    o = _counting_sort(None, nh, n)
    o = _counting_sort(o, nl, alpha)
    o = _counting_sort(o, nt, n)
    ct = array("i", (nt[i] for i in o))
    nt = None
    cl = array("i", (nl[i] for i in o))
    nl = None
    ch = array("i", (nh[i] for i in o))
    nh = None
    finals = frozenset(new_of[q] for q in old_finals)
    return PtDfa(n, alpha, ct, cl, ch, 0, finals)


def is_isomorphic(d1: PtDfa, d2: PtDfa) -> bool:
    """True iff the automata differ only by a renaming of states.

    Alphabet sizes are compared literally.  Both inputs must have all
    states reachable (see :func:`canonicalize`).
    """
    if d1.alpha != d2.alpha or d1.n != d2.n or d1.m != d2.m:
        return False
    return canonicalize(d1) == canonicalize(d2)


def accepts(d: PtDfa, word) -> bool:
    """Run the word; True iff the run survives and ends in a final state."""
    word = list(word)
    for a in word:
        if not 0 <= a < d.alpha:
            raise AutomatonError(f"symbol {a} out of range 0..{d.alpha - 1}")
    step = d.transition_map()
    q = d.initial
    for a in word:
        q = step.get((q, a))
        if q is None:
            return False
    return q in d.finals


@dataclass
class MinimizeStats:
    """Instrumentation from one minimization run.

    ``n_core``/``m_core`` are the sizes after dead-state removal; the
    scan counters are bounded by them: splitter scan touches stay within
    m*(floor(lg n) + 1) and smaller-half rescan touches within
    m*floor(lg n) + m.
    """

    n_in: int = 0
    m_in: int = 0
    alpha: int = 0
    n_out: int = 0
    m_out: int = 0
    n_core: int = 0
    m_core: int = 0
    splits: int = 0
    splitter_touches: int = 0
    small_half_touches: int = 0
    seconds: float = 0.0

    def within_scan_bounds(self) -> bool:
        """Check the guaranteed worst-case scan counts."""
        if self.n_core < 1:
            return self.splitter_touches == 0 and self.small_half_touches == 0
        lg = self.n_core.bit_length() - 1
        return (self.splitter_touches <= self.m_core * (lg + 1)
                and self.small_half_touches <= self.m_core * lg + self.m_core)

    def as_lines(self) -> list:
        """key=value lines for diagnostic output."""
        return [
            f"n_in={self.n_in}",
            f"m_in={self.m_in}",
            f"alpha={self.alpha}",
            f"n_out={self.n_out}",
            f"m_out={self.m_out}",
            f"n_core={self.n_core}",
            f"m_core={self.m_core}",
            f"splits={self.splits}",
            f"splitter_touches={self.splitter_touches}",
            f"small_half_touches={self.small_half_touches}",
            f"seconds={self.seconds:.6f}",
        ]
