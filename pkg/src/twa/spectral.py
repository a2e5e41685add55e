"""Square matrices over tropical semirings: products, maximum mean cycle, star.

Matrices are stored sparsely (one dict per row; absent entries are the
semiring zero), which keeps the large but thin products produced by the
automaton constructions cheap.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionError, PositiveCycleError, TagMismatchError
from .semiring import Semiring, as_value, semiring_for


class TropicalMatrix:
    """A square matrix of weights over a single semiring tag."""

    __slots__ = ("semiring", "n", "rows")

    def __init__(self, tag, n: int, rows=None):
        self.semiring: Semiring = semiring_for(tag)
        if n < 0:
            raise DimensionError("matrix dimension must be nonnegative")
        self.n = n
        if rows is None:
            self.rows = [{} for _ in range(n)]
        else:
            if len(rows) != n:
                raise DimensionError(f"expected {n} rows, got {len(rows)}")
            self.rows = [dict(row) for row in rows]
            for i, row in enumerate(self.rows):
                for j, w in row.items():
                    if not 0 <= j < n:
                        raise DimensionError(f"column {j} out of range in row {i}")
                    if w is None or not self.semiring.is_weight(w):
                        raise TagMismatchError(
                            f"entry ({i},{j})={w!r} is not a finite {self.semiring.tag} weight"
                        )

    @classmethod
    def from_rows(cls, tag, dense_rows) -> "TropicalMatrix":
        """Build from dense lists; None entries denote the semiring zero."""
        n = len(dense_rows)
        rows = []
        for drow in dense_rows:
            if len(drow) != n:
                raise DimensionError("dense matrix must be square")
            rows.append({j: w for j, w in enumerate(drow) if w is not None})
        return cls(tag, n, rows)

    @classmethod
    def identity(cls, tag, n: int) -> "TropicalMatrix":
        sr = semiring_for(tag)
        return cls(sr, n, [{i: sr.one} for i in range(n)])

    def entry(self, i: int, j: int):
        return self.rows[i].get(j)

    def to_rows(self):
        """Dense list-of-lists view with None for zero entries."""
        return [[row.get(j) for j in range(self.n)] for row in self.rows]

    def arcs(self):
        """Yield (i, j, weight) for every nonzero entry."""
        for i, row in enumerate(self.rows):
            for j, w in row.items():
                yield i, j, w

    def __eq__(self, other):
        if not isinstance(other, TropicalMatrix):
            return NotImplemented
        return (
            self.semiring.tag == other.semiring.tag
            and self.n == other.n
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"TropicalMatrix({self.semiring.tag!r}, {self.n}, {self.rows!r})"


def _check_compatible(a: TropicalMatrix, b: TropicalMatrix):
    if a.semiring.tag != b.semiring.tag:
        raise TagMismatchError(
            f"mixed-tag matrices: {a.semiring.tag} vs {b.semiring.tag}"
        )
    if a.n != b.n:
        raise DimensionError(f"dimension mismatch: {a.n} vs {b.n}")


def mat_mul(a: TropicalMatrix, b: TropicalMatrix) -> TropicalMatrix:
    """Semiring matrix product."""
    _check_compatible(a, b)
    sr = a.semiring
    out = TropicalMatrix(sr, a.n)
    for i, arow in enumerate(a.rows):
        acc = out.rows[i]
        for k, w1 in arow.items():
            for j, w2 in b.rows[k].items():
                c = sr.times(w1, w2)
                old = acc.get(j)
                acc[j] = c if old is None else sr.plus(old, c)
    return out


def mat_add(a: TropicalMatrix, b: TropicalMatrix) -> TropicalMatrix:
    """Entrywise semiring addition."""
    _check_compatible(a, b)
    sr = a.semiring
    out = TropicalMatrix(sr, a.n)
    for i in range(a.n):
        row = dict(a.rows[i])
        for j, w in b.rows[i].items():
            old = row.get(j)
            row[j] = w if old is None else sr.plus(old, w)
        out.rows[i] = row
    return out


def vec_mat(x: dict, m: TropicalMatrix) -> dict:
    """Sparse row-vector times matrix; vectors are dicts state -> weight."""
    sr = m.semiring
    out: dict = {}
    for i, xi in x.items():
        for j, w in m.rows[i].items():
            c = sr.times(xi, w)
            old = out.get(j)
            out[j] = c if old is None else sr.plus(old, c)
    return out


# ---------------------------------------------------------------------------
# Maximum mean cycle.
# ---------------------------------------------------------------------------


def _strongly_connected_components(n: int, adj) -> list[list[int]]:
    """Kosaraju's algorithm, iterative; returns components as lists of nodes."""
    order = []
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        stack = [(start, iter(adj[start]))]
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if not seen[nxt]:
                    seen[nxt] = True
                    stack.append((nxt, iter(adj[nxt])))
                    advanced = True
                    break
            if not advanced:
                order.append(node)
                stack.pop()
    radj = [[] for _ in range(n)]
    for u in range(n):
        for v in adj[u]:
            radj[v].append(u)
    comp = [-1] * n
    components: list[list[int]] = []
    for node in reversed(order):
        if comp[node] != -1:
            continue
        cid = len(components)
        members = [node]
        comp[node] = cid
        queue = [node]
        while queue:
            u = queue.pop()
            for v in radj[u]:
                if comp[v] == -1:
                    comp[v] = cid
                    members.append(v)
                    queue.append(v)
        components.append(members)
    return components


def _karp_component(nodes: list[int], arcs) -> Fraction | int | None:
    """Maximum cycle mean inside one strongly connected component.

    Karp's table D[k][v] holds the maximum weight of a walk of exactly k arcs
    from an arbitrary source; the answer is max_v min_k (D[nc][v]-D[k][v])/(nc-k).
    """
    nc = len(nodes)
    local = {v: i for i, v in enumerate(nodes)}
    larcs = [(local[u], local[v], w) for u, v, w in arcs]
    if not larcs:
        return None
    d = [[None] * nc for _ in range(nc + 1)]
    d[0][0] = 0
    for k in range(1, nc + 1):
        prev, cur = d[k - 1], d[k]
        for u, v, w in larcs:
            pu = prev[u]
            if pu is None:
                continue
            c = pu + w
            if cur[v] is None or c > cur[v]:
                cur[v] = c
    best = None
    top = d[nc]
    for v in range(nc):
        tv = top[v]
        if tv is None:
            continue
        vmin = None
        for k in range(nc):
            dk = d[k][v]
            if dk is None:
                continue
            mean = Fraction(tv - dk, nc - k)
            if vmin is None or mean < vmin:
                vmin = mean
        if best is None or vmin > best:
            best = vmin
    return best


def max_mean_cycle(m: TropicalMatrix):
    """The maximal mean weight over all simple circuits of the graph of ``m``.

    Returns an exact rational, or None (the semiring zero) when the graph is
    acyclic.  Runs Karp's algorithm once per nontrivial strongly connected
    component and takes the maximum.
    """
    if m.semiring.tag != "max-plus":
        raise TagMismatchError("max_mean_cycle requires a max-plus matrix")
    adj = [sorted(row) for row in m.rows]
    best = None
    for nodes in _strongly_connected_components(m.n, adj):
        members = set(nodes)
        arcs = [
            (u, v, w)
            for u in nodes
            for v, w in m.rows[u].items()
            if v in members
        ]
        if not arcs:
            continue
        mean = _karp_component(nodes, arcs)
        if mean is not None and (best is None or mean > best):
            best = mean
    return None if best is None else as_value(best)


# ---------------------------------------------------------------------------
# Star.
# ---------------------------------------------------------------------------


def mat_star(m: TropicalMatrix) -> TropicalMatrix:
    """All-pairs maximal path weight with 0 on the diagonal.

    Equals I + M + M^2 + ... + M^(n-1); only defined when no cycle has
    positive weight, otherwise the sum diverges and PositiveCycleError is
    raised.  Computed by Floyd-Warshall-style relaxation.
    """
    rho = max_mean_cycle(m)
    if rho is not None and rho > 0:
        raise PositiveCycleError(f"matrix star diverges: maximum cycle mean is {rho}")
    n = m.n
    dist = [dict(row) for row in m.rows]
    for k in range(n):
        dk = dist[k]
        if not dk:
            continue
        for i in range(n):
            if i == k:
                # k -> k -> j cannot improve anything: cycles weigh <= 0.
                continue
            dik = dist[i].get(k)
            if dik is None:
                continue
            di = dist[i]
            for j, dkj in dk.items():
                c = dik + dkj
                old = di.get(j)
                if old is None or c > old:
                    di[j] = c
    for i in range(n):
        dist[i][i] = 0
    return TropicalMatrix(m.semiring, n, dist)


def star_vector(m: TropicalMatrix, beta: list) -> list:
    """The product (star of m) times the column vector ``beta``, without forming the star.

    Entry i is the maximal weight of a path from i into the support of beta,
    final weight included.  Computed by Bellman-Ford-style relaxation over the
    arcs, which is O(n*m) on sparse matrices; requires every cycle weight
    to be nonpositive.
    """
    if m.semiring.tag != "max-plus":
        raise TagMismatchError("star_vector requires a max-plus matrix")
    if len(beta) != m.n:
        raise DimensionError("vector length does not match matrix dimension")
    arcs = list(m.arcs())
    u = list(beta)

    def relax_once() -> bool:
        changed = False
        for i, j, w in arcs:
            uj = u[j]
            if uj is None:
                continue
            c = w + uj
            if u[i] is None or c > u[i]:
                u[i] = c
                changed = True
        return changed

    for _ in range(m.n):
        if not relax_once():
            break
    else:
        if relax_once():
            raise PositiveCycleError("star diverges: positive-weight cycle reached")
    return u
