"""Decision procedures for max-plus rational series.

All entry points trim internally, so user automata need not be trim.  Every
negative verdict comes with a witness word that fails the property exactly;
witnesses are deterministic (first in length-lex order where the search is
breadth-first, argmax backtracking otherwise).

Min-plus questions are the duals of these under the negation isomorphism; the
command line performs that translation, the library functions insist on
max-plus input.
"""

from __future__ import annotations

from collections import deque
from typing import NamedTuple, Optional

from .automaton import BooleanAutomaton, WeightedAutomaton, hadamard
from .errors import (
    AlphabetError,
    CapExceededError,
    NotNonpositiveError,
    TagMismatchError,
)
from .semiring import is_rational
from .spectral import TropicalMatrix, max_mean_cycle, star_vector, vec_mat

DEFAULT_MONOID_CAP = 1_000_000


class Decision(NamedTuple):
    """Outcome of a decision procedure: the verdict plus an optional witness word."""

    holds: bool
    witness: Optional[str]


def _require_max_plus(aut: WeightedAutomaton, op: str):
    if aut.semiring.tag != "max-plus":
        raise TagMismatchError(f"{op} requires a max-plus automaton, got {aut.semiring.tag}")


def _shift_final(aut: WeightedAutomaton, delta) -> WeightedAutomaton:
    """Add ``delta`` to every finite final weight; shifts the series by delta."""
    if delta == 0:
        return aut
    beta = [None if w is None else w + delta for w in aut.beta]
    return WeightedAutomaton(
        aut.semiring, aut.alphabet, aut.n, aut.alpha, beta, aut.mu, aut.state_labels
    )


# ---------------------------------------------------------------------------
# Nonpositivity.
# ---------------------------------------------------------------------------


def decide_nonpositive(aut: WeightedAutomaton) -> Decision:
    """Decide whether every coefficient of the series is <= 0.

    Criterion on the trimmed automaton with M the letter sum: the maximum
    cycle mean of M must be <= 0 and alpha M^k beta <= 0 for every k < n.
    Polynomial; the returned witness word has a value > 0 (exactly).
    """
    _require_max_plus(aut, "decide_nonpositive")
    return _nonpositive_trimmed(aut.trim())


def _nonpositive_trimmed(trim: WeightedAutomaton) -> Decision:
    if trim.n == 0:
        return Decision(True, None)
    m = trim.letter_sum()
    # scan alpha M^k beta for k < n first: when it fails, the witness is a
    # shortest offending word; the cycle test only matters beyond that range
    profiles = [{i: w for i, w in enumerate(trim.alpha) if w is not None}]
    for k in range(trim.n):
        x = profiles[k]
        best, best_state = None, None
        for i, xi in sorted(x.items()):
            b = trim.beta[i]
            if b is None:
                continue
            v = xi + b
            if best is None or v > best:
                best, best_state = v, i
        if best is not None and best > 0:
            return Decision(False, _backtrack_word(trim, profiles, k, best_state))
        if k + 1 < trim.n:
            profiles.append(vec_mat(x, m))
    rho = max_mean_cycle(m)
    if rho is not None and rho > 0:
        return Decision(False, _pumped_witness(trim, m, rho))
    return Decision(True, None)


def _backtrack_word(aut: WeightedAutomaton, profiles, k: int, end_state: int) -> str:
    """Recover a length-k word whose best path reaches ``end_state`` with the profile value."""
    letters = []
    cur = end_state
    for t in range(k, 0, -1):
        target = profiles[t][cur]
        prev = profiles[t - 1]
        hop = None
        for i in sorted(prev):
            for ch in aut.alphabet:
                w = aut.mu[ch].rows[i].get(cur)
                if w is not None and prev[i] + w == target:
                    hop = (i, ch)
                    break
            if hop:
                break
        assert hop is not None, "profile backtracking lost the maximizing path"
        cur, ch = hop
        letters.append(ch)
    return "".join(reversed(letters))


def _find_critical_cycle(m: TropicalMatrix, rho) -> list[int]:
    """A circuit of ``m`` whose mean weight equals the maximum mean ``rho``.

    Subtracting rho from every arc makes all cycle weights <= 0, so the
    longest-walk potentials b (from an all-zero floor) reach a fixpoint; the
    arcs that are tight for b form a subgraph in which every cycle has mean
    exactly rho, and the critical circuit guarantees at least one exists.
    """
    n = m.n
    arcs = [(i, j, w - rho) for i, j, w in m.arcs()]
    b = [0] * n
    for _ in range(n + 1):
        changed = False
        for i, j, w in arcs:
            c = b[i] + w
            if c > b[j]:
                b[j] = c
                changed = True
        if not changed:
            break
    assert not changed, "potentials failed to converge; mean cycle was wrong"
    tight = [[] for _ in range(n)]
    for i, j, w in arcs:
        if b[i] + w == b[j]:
            tight[i].append(j)
    for row in tight:
        row.sort()
    color = [0] * n  # 0 fresh, 1 on stack, 2 done
    for start in range(n):
        if color[start] or not tight[start]:
            continue
        path = [start]
        iters = [iter(tight[start])]
        color[start] = 1
        while path:
            for nxt in iters[-1]:
                if color[nxt] == 1:
                    return path[path.index(nxt):]
                if color[nxt] == 0:
                    color[nxt] = 1
                    path.append(nxt)
                    iters.append(iter(tight[nxt]))
                    break
            else:
                color[path.pop()] = 2
                iters.pop()
    raise AssertionError("tight subgraph has no cycle; mean cycle was wrong")


def _pumped_witness(trim: WeightedAutomaton, m: TropicalMatrix, rho) -> str:
    """Build a word with positive value from a maximum-mean (positive) circuit.

    The witness pumps the circuit enough times to dominate the exact weight
    of its access and co-access paths.
    """
    cycle = _find_critical_cycle(m, rho)
    cycle_word = []
    cycle_weight = 0
    for idx, src in enumerate(cycle):
        dst = cycle[(idx + 1) % len(cycle)]
        target = m.rows[src][dst]
        for ch in trim.alphabet:
            if trim.mu[ch].rows[src].get(dst) == target:
                cycle_word.append(ch)
                break
        else:
            raise AssertionError("letter sum lost the maximizing letter")
        cycle_weight += target
    assert cycle_weight > 0, "extracted cycle is not positive"
    start = cycle[0]

    access_word, access_weight = _bfs_path(trim, start, forward=True)
    coaccess_word, coaccess_weight = _bfs_path(trim, start, forward=False)
    base = access_weight + coaccess_weight
    if base + cycle_weight > 0:
        pumps = 1
    else:
        # exact floor division keeps this correct for Fraction weights too
        pumps = (-base) // cycle_weight + 1
    return access_word + "".join(cycle_word) * pumps + coaccess_word


def _bfs_path(trim: WeightedAutomaton, target: int, forward: bool):
    """Shortest word from an initial arrow to ``target`` (or from it to a final arrow).

    Returns (word, exact weight of that particular path including the arrow).
    The automaton is trim, so the path exists.
    """
    if forward:
        seeds = {i: w for i, w in enumerate(trim.alpha) if w is not None}
    else:
        seeds = {i: w for i, w in enumerate(trim.beta) if w is not None}
    prev = {}
    queue = deque()
    for state in sorted(seeds):
        prev[state] = None
        queue.append(state)
    while queue:
        state = queue.popleft()
        if state == target:
            break
        for ch in trim.alphabet:
            if forward:
                hops = trim.mu[ch].rows[state].items()
            else:
                hops = (
                    (i, row[state])
                    for i, row in enumerate(trim.mu[ch].rows)
                    if state in row
                )
            for nxt, w in sorted(hops):
                if nxt not in prev:
                    prev[nxt] = (state, ch, w)
                    queue.append(nxt)
    assert target in prev, "trim automaton lost access to the cycle"
    letters = []
    weight = 0
    node = target
    while prev[node] is not None:
        node, ch, w = prev[node]
        letters.append(ch)
        weight += w
    weight += seeds[node]
    if forward:
        letters.reverse()
    return "".join(letters), weight


# ---------------------------------------------------------------------------
# Fatou normalization.
# ---------------------------------------------------------------------------


def fatou_normalize(aut: WeightedAutomaton) -> WeightedAutomaton:
    """Renormalize a nonpositive series onto nonpositive weights.

    Conjugates the trimmed automaton by the diagonal potential u = M*beta
    (the best path-to-acceptance weight per state): alpha'_i = alpha_i + u_i,
    beta'_i = beta_i - u_i, mu'(a)_ij = -u_i + mu(a)_ij + u_j.  The series is
    unchanged, every output weight is <= 0, and the state count equals the
    trimmed input's.  Raises NotNonpositiveError (with witness) when some
    coefficient is positive.
    """
    _require_max_plus(aut, "fatou_normalize")
    trim = aut.trim()
    verdict = _nonpositive_trimmed(trim)
    if not verdict.holds:
        raise NotNonpositiveError(verdict.witness)
    return _fatou_trimmed(trim)


def fatou_potential(trim: WeightedAutomaton) -> list:
    """The vector u = M*beta of a trim automaton with nonpositive cycles."""
    u = star_vector(trim.letter_sum(), trim.beta)
    assert all(v is not None for v in u), "trim automaton has a state with no exit"
    return u


def _fatou_trimmed(trim: WeightedAutomaton) -> WeightedAutomaton:
    if trim.n == 0:
        return trim
    u = fatou_potential(trim)
    alpha = [None if w is None else w + u[i] for i, w in enumerate(trim.alpha)]
    beta = [None if w is None else w - u[i] for i, w in enumerate(trim.beta)]
    mu = {}
    for ch, mat in trim.mu.items():
        rows = [
            {j: w - u[i] + u[j] for j, w in mat.rows[i].items()}
            for i in range(trim.n)
        ]
        mu[ch] = TropicalMatrix(trim.semiring, trim.n, rows)
    return WeightedAutomaton(
        trim.semiring, trim.alphabet, trim.n, alpha, beta, mu, trim.state_labels
    )


def _zero_filter(aut: WeightedAutomaton) -> BooleanAutomaton:
    """Keep exactly the weight-0 arrows/arcs of a nonpositively-weighted automaton.

    On a Fatou-normalized automaton the resulting NFA accepts exactly the
    words with coefficient 0.
    """
    initial = frozenset(i for i, w in enumerate(aut.alpha) if w == 0)
    final = frozenset(i for i, w in enumerate(aut.beta) if w == 0)
    delta = {}
    for ch, mat in aut.mu.items():
        for i, row in enumerate(mat.rows):
            targets = frozenset(j for j, w in row.items() if w == 0)
            if targets:
                delta[(i, ch)] = targets
    return BooleanAutomaton(aut.alphabet, aut.n, initial, final, delta)


# ---------------------------------------------------------------------------
# Boolean transition monoid.
# ---------------------------------------------------------------------------


def _bool_matrix(nfa: BooleanAutomaton, ch: str) -> tuple:
    return tuple(
        sum(1 << j for j in nfa.moves(i, ch)) for i in range(nfa.n)
    )


def _bool_mul(a: tuple, b: tuple) -> tuple:
    out = []
    for bits in a:
        acc = 0
        while bits:
            low = bits & -bits
            acc |= b[low.bit_length() - 1]
            bits ^= low
        out.append(acc)
    return tuple(out)


def boolean_monoid_closure(nfa: BooleanAutomaton, cap: int = DEFAULT_MONOID_CAP) -> dict:
    """The transition monoid {matrix of w : w word}, identity included.

    Matrices are tuples of row bitmasks.  Returns a dict matrix -> shortest
    witness word, in breadth-first (length-lex) discovery order.  Raises
    CapExceededError when more than ``cap`` distinct matrices appear; the
    monoid can hold up to 2^(n^2) elements.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    generators = [(ch, _bool_matrix(nfa, ch)) for ch in nfa.alphabet]
    identity = tuple(1 << i for i in range(nfa.n))
    closure = {identity: ""}
    queue = deque([identity])
    while queue:
        mat = queue.popleft()
        word = closure[mat]
        for ch, gen in generators:
            product = _bool_mul(mat, gen)
            if product not in closure:
                if len(closure) >= cap:
                    raise CapExceededError("boolean monoid closure", cap)
                closure[product] = word + ch
                queue.append(product)
    return closure


def _matrix_accepts(mat: tuple, initial, final_mask: int) -> bool:
    return any(mat[i] & final_mask for i in initial)


# ---------------------------------------------------------------------------
# Constant-series tests.
# ---------------------------------------------------------------------------


def decide_equal_const(
    aut: WeightedAutomaton, const, monoid_cap: int = DEFAULT_MONOID_CAP
) -> Decision:
    """Decide whether every word (all of Sigma*) has coefficient exactly ``const``.

    Shifts the series by -const, requires nonpositivity, Fatou-normalizes,
    keeps only weight-0 arrows, and then checks that every matrix of the
    Boolean transition monoid maps some initial state into a final one.
    """
    _require_max_plus(aut, "decide_equal_const")
    if not is_rational(const):
        raise TypeError(f"constant must be an exact rational, got {const!r}")
    trim = _shift_final(aut, -const).trim()
    verdict = _nonpositive_trimmed(trim)
    if not verdict.holds:
        return Decision(False, verdict.witness)
    filtered = _zero_filter(_fatou_trimmed(trim))
    final_mask = sum(1 << j for j in filtered.final)
    initial = sorted(filtered.initial)
    for mat, word in boolean_monoid_closure(filtered, monoid_cap).items():
        if not _matrix_accepts(mat, initial, final_mask):
            return Decision(False, word)
    return Decision(True, None)


def decide_equal_const_on_support(
    aut: WeightedAutomaton, const, monoid_cap: int = DEFAULT_MONOID_CAP
) -> Decision:
    """Decide whether every word *of the support* has coefficient ``const``.

    Same pipeline as decide_equal_const, but the final check compares the
    support NFA with the weight-0 filtered NFA for language equality, so
    words outside the support are unconstrained.  (The monoid cap is unused
    here; kept for signature symmetry.)
    """
    _require_max_plus(aut, "decide_equal_const_on_support")
    if not is_rational(const):
        raise TypeError(f"constant must be an exact rational, got {const!r}")
    trim = aut.trim()
    shifted = _shift_final(trim, -const)
    verdict = _nonpositive_trimmed(shifted)
    if not verdict.holds:
        return Decision(False, verdict.witness)
    filtered = _zero_filter(_fatou_trimmed(shifted))
    return nfa_equivalence(trim.support(), filtered)


# ---------------------------------------------------------------------------
# NFA comparisons (on-the-fly product of subset constructions).
# ---------------------------------------------------------------------------


def _nfa_compare(a: BooleanAutomaton, b: BooleanAutomaton, inclusion: bool) -> Decision:
    if a.alphabet != b.alphabet:
        raise AlphabetError("NFA comparison requires identical alphabets")

    def bad(pair) -> bool:
        acc_a = bool(pair[0] & a.final)
        acc_b = bool(pair[1] & b.final)
        return (acc_a and not acc_b) if inclusion else (acc_a != acc_b)

    start = (frozenset(a.initial), frozenset(b.initial))
    parents: dict = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        if bad(pair):
            letters = []
            node = pair
            while parents[node] is not None:
                node, ch = parents[node]
                letters.append(ch)
            return Decision(False, "".join(reversed(letters)))
        for ch in a.alphabet:
            nxt = (a.step(pair[0], ch), b.step(pair[1], ch))
            if nxt not in parents:
                parents[nxt] = (pair, ch)
                queue.append(nxt)
    return Decision(True, None)


def nfa_equivalence(a: BooleanAutomaton, b: BooleanAutomaton) -> Decision:
    """Language equality of two NFAs; the witness is the length-lex first difference."""
    return _nfa_compare(a, b, inclusion=False)


def nfa_inclusion(a: BooleanAutomaton, b: BooleanAutomaton) -> Decision:
    """Language inclusion L(a) <= L(b); the witness is accepted by a only."""
    return _nfa_compare(a, b, inclusion=True)


# ---------------------------------------------------------------------------
# Max-plus vs min-plus series comparison.
# ---------------------------------------------------------------------------


def _check_pair(amax: WeightedAutomaton, bmin: WeightedAutomaton, op: str):
    if amax.semiring.tag != "max-plus":
        raise TagMismatchError(f"{op}: first automaton must be max-plus")
    if bmin.semiring.tag != "min-plus":
        raise TagMismatchError(f"{op}: second automaton must be min-plus")
    if amax.alphabet != bmin.alphabet:
        raise AlphabetError(f"{op}: automata must share one alphabet")


def decide_series_equal(amax: WeightedAutomaton, bmin: WeightedAutomaton) -> Decision:
    """Decide S = T for a max-plus S and a min-plus T.

    Equality means: equal supports, and equal coefficients on the support.
    Checked as (a) NFA equivalence of the supports and (b) the pointwise
    difference S - T (a tensor product with the negated T) being constantly 0
    on its support.
    """
    _check_pair(amax, bmin, "decide_series_equal")
    ta = amax.trim()
    tb = bmin.trim()
    supports = nfa_equivalence(ta.support(), tb.support())
    if not supports.holds:
        return supports
    return decide_equal_const_on_support(hadamard(ta, tb.negate()), 0)


def decide_series_leq(amax: WeightedAutomaton, bmin: WeightedAutomaton) -> Decision:
    """Decide S <= T: supp S contained in supp T and S(w) <= T(w) on supp S."""
    _check_pair(amax, bmin, "decide_series_leq")
    ta = amax.trim()
    tb = bmin.trim()
    included = nfa_inclusion(ta.support(), tb.support())
    if not included.holds:
        return included
    return decide_nonpositive(hadamard(ta, tb.negate()))


__all__ = [
    "Decision",
    "DEFAULT_MONOID_CAP",
    "decide_nonpositive",
    "fatou_normalize",
    "fatou_potential",
    "boolean_monoid_closure",
    "decide_equal_const",
    "decide_equal_const_on_support",
    "nfa_equivalence",
    "nfa_inclusion",
    "decide_series_equal",
    "decide_series_leq",
]
