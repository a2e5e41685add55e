"""Weighted automata as linear representations.

An automaton is a triple (alpha, mu, beta): an initial weight vector, one
square transition matrix per letter, and a final weight vector, all over a
single semiring tag.  States are dense integers 0..n-1; initial and final
weights play the role of ingoing/outgoing arrows, so there are no designated
initial/final state sets at this level.

Everything here is pure: automata are immutable after construction and all
operations build new ones.
"""

from __future__ import annotations

from .errors import AlphabetError, DimensionError, TagMismatchError, TwaError
from .semiring import MAX_PLUS, MIN_PLUS, Semiring, semiring_for
from .spectral import TropicalMatrix, mat_add, vec_mat


def _valid_symbol(ch) -> bool:
    # single visible ASCII character; '#' is reserved for comments in files
    return isinstance(ch, str) and len(ch) == 1 and 33 <= ord(ch) <= 126 and ch != "#"


class WeightedAutomaton:
    """A linear representation over max-plus, min-plus, boolean, or the pair semiring."""

    __slots__ = ("semiring", "alphabet", "n", "alpha", "beta", "mu", "state_labels")

    def __init__(self, tag, alphabet, n: int, alpha, beta, mu, state_labels=None):
        sr = semiring_for(tag)
        alphabet = tuple(alphabet)
        if len(set(alphabet)) != len(alphabet):
            raise AlphabetError("alphabet symbols must be distinct")
        for ch in alphabet:
            if not _valid_symbol(ch):
                raise AlphabetError(f"bad alphabet symbol {ch!r}")
        if n < 0:
            raise DimensionError("state count must be nonnegative")
        if len(alpha) != n or len(beta) != n:
            raise DimensionError("initial/final vectors must have length n")
        if set(mu) != set(alphabet):
            raise AlphabetError("every alphabet letter needs exactly one matrix")
        for vec in (alpha, beta):
            for i, w in enumerate(vec):
                if w is not None and not sr.is_weight(w):
                    raise TagMismatchError(f"vector entry {i}={w!r} is not a {sr.tag} weight")
        for ch, mat in mu.items():
            if not isinstance(mat, TropicalMatrix):
                raise TypeError(f"mu[{ch!r}] must be a TropicalMatrix")
            if mat.semiring.tag != sr.tag:
                raise TagMismatchError(f"mu[{ch!r}] has tag {mat.semiring.tag}, automaton has {sr.tag}")
            if mat.n != n:
                raise DimensionError(f"mu[{ch!r}] has dimension {mat.n}, automaton has {n}")
        if state_labels is not None:
            state_labels = tuple(str(s) for s in state_labels)
            if len(state_labels) != n:
                raise DimensionError("state_labels must have length n")
        self.semiring: Semiring = sr
        self.alphabet = alphabet
        self.n = n
        self.alpha = list(alpha)
        self.beta = list(beta)
        self.mu = {ch: mu[ch] for ch in alphabet}
        self.state_labels = state_labels

    @classmethod
    def from_arcs(cls, tag, alphabet, n, *, initial=(), final=(), arcs=(), labels=None):
        """Convenience constructor from (state, weight) and (src, letter, dst, weight) lists."""
        sr = semiring_for(tag)
        alphabet = tuple(alphabet)
        alpha = [None] * n
        beta = [None] * n
        rows = {ch: [dict() for _ in range(n)] for ch in alphabet}

        def _check_state(i):
            if not 0 <= i < n:
                raise DimensionError(f"state {i} out of range for {n} states")

        for i, w in initial:
            _check_state(i)
            if alpha[i] is not None:
                raise TwaError(f"duplicate initial weight for state {i}")
            alpha[i] = w
        for i, w in final:
            _check_state(i)
            if beta[i] is not None:
                raise TwaError(f"duplicate final weight for state {i}")
            beta[i] = w
        for src, ch, dst, w in arcs:
            _check_state(src)
            _check_state(dst)
            if ch not in rows:
                raise AlphabetError(f"unknown letter {ch!r}")
            if dst in rows[ch][src]:
                raise TwaError(f"duplicate arc {src} -{ch}-> {dst}")
            rows[ch][src][dst] = w
        mu = {ch: TropicalMatrix(sr, n, rows[ch]) for ch in alphabet}
        return cls(sr, alphabet, n, alpha, beta, mu, state_labels=labels)

    # -- basic queries ------------------------------------------------------

    def state_label(self, i: int) -> str:
        return self.state_labels[i] if self.state_labels else str(i)

    def arcs(self):
        """Yield (src, letter, dst, weight) in deterministic order."""
        for src in range(self.n):
            for ch in self.alphabet:
                row = self.mu[ch].rows[src]
                for dst in sorted(row):
                    yield src, ch, dst, row[dst]

    def __eq__(self, other):
        if not isinstance(other, WeightedAutomaton):
            return NotImplemented
        return (
            self.semiring.tag == other.semiring.tag
            and self.alphabet == other.alphabet
            and self.n == other.n
            and self.alpha == other.alpha
            and self.beta == other.beta
            and all(self.mu[ch] == other.mu[ch] for ch in self.alphabet)
        )

    def __repr__(self):
        arcs = sum(len(r) for m in self.mu.values() for r in m.rows)
        return (
            f"<WeightedAutomaton {self.semiring.tag} states={self.n} "
            f"alphabet={''.join(self.alphabet)!r} arcs={arcs}>"
        )

    # -- evaluation ---------------------------------------------------------

    def eval(self, word: str):
        """The coefficient of ``word``: alpha * mu(word) * beta.

        Returns the semiring zero (None) when the word has no successful path.
        """
        for ch in word:
            if ch not in self.mu:
                raise AlphabetError(f"symbol {ch!r} is not in the alphabet")
        sr = self.semiring
        x = {i: w for i, w in enumerate(self.alpha) if w is not None}
        for ch in word:
            if not x:
                return None
            x = vec_mat(x, self.mu[ch])
        acc = None
        for i, xi in x.items():
            b = self.beta[i]
            if b is not None:
                acc = sr.plus(acc, sr.times(xi, b))
        return acc

    # -- structure ----------------------------------------------------------

    def _boolean_adjacency(self):
        adj = [set() for _ in range(self.n)]
        for mat in self.mu.values():
            for i, row in enumerate(mat.rows):
                adj[i].update(row)
        return adj

    def trim(self) -> "WeightedAutomaton":
        """Restrict to states that lie on some successful path.

        Keeps exactly the states both reachable from a nonzero initial entry
        and co-reachable to a nonzero final entry; the recognized series is
        unchanged.  Idempotent; returns self when already trim.
        """
        adj = self._boolean_adjacency()
        fwd = {i for i, w in enumerate(self.alpha) if w is not None}
        queue = list(fwd)
        while queue:
            u = queue.pop()
            for v in adj[u]:
                if v not in fwd:
                    fwd.add(v)
                    queue.append(v)
        radj = [set() for _ in range(self.n)]
        for u in range(self.n):
            for v in adj[u]:
                radj[v].add(u)
        bwd = {i for i, w in enumerate(self.beta) if w is not None}
        queue = list(bwd)
        while queue:
            u = queue.pop()
            for v in radj[u]:
                if v not in bwd:
                    bwd.add(v)
                    queue.append(v)
        keep = sorted(fwd & bwd)
        if len(keep) == self.n:
            return self
        index = {old: new for new, old in enumerate(keep)}
        n = len(keep)
        alpha = [self.alpha[old] for old in keep]
        beta = [self.beta[old] for old in keep]
        mu = {}
        for ch, mat in self.mu.items():
            rows = [
                {index[j]: w for j, w in mat.rows[old].items() if j in index}
                for old in keep
            ]
            mu[ch] = TropicalMatrix(self.semiring, n, rows)
        labels = tuple(self.state_labels[old] for old in keep) if self.state_labels else None
        return WeightedAutomaton(self.semiring, self.alphabet, n, alpha, beta, mu, labels)

    def support(self) -> "BooleanAutomaton":
        """The Boolean automaton accepting exactly the words with nonzero coefficient."""
        initial = frozenset(i for i, w in enumerate(self.alpha) if w is not None)
        final = frozenset(i for i, w in enumerate(self.beta) if w is not None)
        delta = {}
        for ch, mat in self.mu.items():
            for i, row in enumerate(mat.rows):
                if row:
                    delta[(i, ch)] = frozenset(row)
        return BooleanAutomaton(self.alphabet, self.n, initial, final, delta)

    def negate(self) -> "WeightedAutomaton":
        """Negate every weight and flip max-plus <-> min-plus.

        Realizes the semiring isomorphism, so the result's series is the
        pointwise negation of this one's.
        """
        if self.semiring.tag == "max-plus":
            sr = MIN_PLUS
        elif self.semiring.tag == "min-plus":
            sr = MAX_PLUS
        else:
            raise TagMismatchError(f"cannot negate a {self.semiring.tag} automaton")
        alpha = [None if w is None else -w for w in self.alpha]
        beta = [None if w is None else -w for w in self.beta]
        mu = {
            ch: TropicalMatrix(sr, self.n, [{j: -w for j, w in row.items()} for row in mat.rows])
            for ch, mat in self.mu.items()
        }
        return WeightedAutomaton(sr, self.alphabet, self.n, alpha, beta, mu, self.state_labels)

    def letter_sum(self) -> TropicalMatrix:
        """The entrywise semiring sum of all letter matrices."""
        if self.semiring.tag not in ("max-plus", "min-plus"):
            raise TagMismatchError(f"letter_sum is not defined for tag {self.semiring.tag!r}")
        acc = TropicalMatrix(self.semiring, self.n)
        for ch in self.alphabet:
            acc = mat_add(acc, self.mu[ch])
        return acc


def negate_series(aut: WeightedAutomaton) -> WeightedAutomaton:
    """Function form of WeightedAutomaton.negate."""
    return aut.negate()


def _combined_label(a: WeightedAutomaton, p: int, b: WeightedAutomaton, q: int) -> str:
    return f"({a.state_label(p)},{b.state_label(q)})"


def hadamard(a: WeightedAutomaton, b: WeightedAutomaton) -> WeightedAutomaton:
    """Tensor product of representations; realizes the pointwise product of series.

    For every word w: eval(result, w) = eval(a, w) (x) eval(b, w).  Both
    automata must carry the same scalar tag (max-plus or min-plus) and the
    same alphabet.
    """
    if a.semiring.tag != b.semiring.tag:
        raise TagMismatchError(f"mixed tags: {a.semiring.tag} vs {b.semiring.tag}")
    if a.semiring.tag not in ("max-plus", "min-plus"):
        raise TagMismatchError(f"hadamard is not defined for tag {a.semiring.tag!r}")
    if a.alphabet != b.alphabet:
        raise AlphabetError("hadamard requires identical alphabets")
    sr = a.semiring
    bn = b.n
    n = a.n * bn
    alpha = [None] * n
    beta = [None] * n
    for p, wa in enumerate(a.alpha):
        if wa is None:
            continue
        for q, wb in enumerate(b.alpha):
            if wb is not None:
                alpha[p * bn + q] = sr.times(wa, wb)
    for p, wa in enumerate(a.beta):
        if wa is None:
            continue
        for q, wb in enumerate(b.beta):
            if wb is not None:
                beta[p * bn + q] = sr.times(wa, wb)
    mu = {}
    for ch in a.alphabet:
        rows = [dict() for _ in range(n)]
        brows = b.mu[ch].rows
        for p, arow in enumerate(a.mu[ch].rows):
            for q in range(bn):
                brow = brows[q]
                if not brow:
                    continue
                src = rows[p * bn + q]
                for r, w1 in arow.items():
                    base = r * bn
                    for s, w2 in brow.items():
                        src[base + s] = sr.times(w1, w2)
        mu[ch] = TropicalMatrix(sr, n, rows)
    labels = tuple(
        _combined_label(a, p, b, q) for p in range(a.n) for q in range(bn)
    )
    return WeightedAutomaton(sr, a.alphabet, n, alpha, beta, mu, labels)


class BooleanAutomaton:
    """A plain NFA: the image of a weighted automaton under the Boolean projection."""

    __slots__ = ("alphabet", "n", "initial", "final", "delta")

    def __init__(self, alphabet, n: int, initial, final, delta):
        alphabet = tuple(alphabet)
        if n < 0:
            raise DimensionError("state count must be nonnegative")
        initial = frozenset(initial)
        final = frozenset(final)
        for s in initial | final:
            if not 0 <= s < n:
                raise DimensionError(f"state {s} out of range")
        clean = {}
        for (i, ch), targets in delta.items():
            if not 0 <= i < n:
                raise DimensionError(f"state {i} out of range")
            if ch not in alphabet:
                raise AlphabetError(f"unknown letter {ch!r} in transition relation")
            targets = frozenset(targets)
            for j in targets:
                if not 0 <= j < n:
                    raise DimensionError(f"state {j} out of range")
            if targets:
                clean[(i, ch)] = targets
        self.alphabet = alphabet
        self.n = n
        self.initial = initial
        self.final = final
        self.delta = clean

    def moves(self, state: int, letter: str) -> frozenset:
        return self.delta.get((state, letter), frozenset())

    def step(self, states, letter: str) -> frozenset:
        out = set()
        for s in states:
            out.update(self.delta.get((s, letter), ()))
        return frozenset(out)

    def accepts(self, word: str) -> bool:
        for ch in word:
            if ch not in self.alphabet:
                raise AlphabetError(f"symbol {ch!r} is not in the alphabet")
        cur = self.initial
        for ch in word:
            if not cur:
                return False
            cur = self.step(cur, ch)
        return bool(cur & self.final)

    def arcs(self):
        for (i, ch), targets in sorted(
            self.delta.items(), key=lambda kv: (kv[0][0], kv[0][1])
        ):
            for j in sorted(targets):
                yield i, ch, j

    def __eq__(self, other):
        if not isinstance(other, BooleanAutomaton):
            return NotImplemented
        return (
            self.alphabet == other.alphabet
            and self.n == other.n
            and self.initial == other.initial
            and self.final == other.final
            and self.delta == other.delta
        )

    def __repr__(self):
        return (
            f"<BooleanAutomaton states={self.n} initial={sorted(self.initial)} "
            f"final={sorted(self.final)} arcs={sum(len(t) for t in self.delta.values())}>"
        )


def boolean_support(aut: WeightedAutomaton) -> BooleanAutomaton:
    """Function form of WeightedAutomaton.support (kept for symmetry)."""
    return aut.support()


__all__ = [
    "WeightedAutomaton",
    "BooleanAutomaton",
    "hadamard",
    "negate_series",
    "boolean_support",
]
