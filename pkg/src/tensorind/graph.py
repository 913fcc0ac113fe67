"""Bitset graphs, named families, tensor products and disjoint unions.

Vertices are ``0..n-1`` and ``adj[v]`` is a Python ``int`` used as a bitset of
the neighbours of ``v``.  Python integers give word-parallel AND/OR/XOR on
arbitrary widths, which is all the set algebra the solvers need.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, ParameterError, SizeGuardError

DEFAULT_VERTEX_GUARD = 2_000_000
DEFAULT_TRANSITIVITY_GUARD = 16


def iter_bits(x: int) -> Iterator[int]:
    """Yield the indices of set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def lowest_bit(x: int) -> int:
    return (x & -x).bit_length() - 1


def bits_of(vertices: Iterable[int]) -> int:
    b = 0
    for v in vertices:
        b |= 1 << v
    return b


@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertex universe ``0..n-1`` stored as a bitset."""

    bits: int
    n: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.n:
            raise DomainError(f"vertex set has members outside 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        return cls(bits_of(vertices), n)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls((1 << n) - 1, n)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: int) -> bool:
        return v >= 0 and bool(self.bits >> v & 1)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.bits | other.bits, self.n)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.bits & other.bits, self.n)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.bits & ~other.bits, self.n)

    def issubset(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def to_list(self) -> list[int]:
        return list(iter_bits(self.bits))

    def _check(self, other: "VertexSet") -> None:
        if self.n != other.n:
            raise DomainError(f"vertex universes differ ({self.n} vs {other.n})")

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()}, n={self.n})"


class ProductCoords(Sequence):
    """Lazy coordinate labels of a row-major product vertex set."""

    def __init__(self, sizes: Sequence[int]):
        self.sizes = tuple(sizes)
        total = 1
        for s in self.sizes:
            total *= s
        self._len = total

    def __len__(self) -> int:
        return self._len

    def __getitem__(self, index):
        if isinstance(index, slice):
            return [self[i] for i in range(*index.indices(self._len))]
        if index < 0:
            index += self._len
        if not 0 <= index < self._len:
            raise IndexError(index)
        out = []
        for s in reversed(self.sizes):
            index, r = divmod(index, s)
            out.append(r)
        return tuple(reversed(out))

    def index(self, coords: Sequence[int]) -> int:  # type: ignore[override]
        i = 0
        for c, s in zip(coords, self.sizes):
            i = i * s + c
        return i

    def __eq__(self, other) -> bool:
        return isinstance(other, ProductCoords) and other.sizes == self.sizes

    def __hash__(self) -> int:
        return hash(self.sizes)

    def __repr__(self) -> str:
        return f"ProductCoords{self.sizes}"


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable finite simple undirected graph.

    ``labels`` is an optional per-vertex annotation (coordinate tuples for
    products, subsets for Kneser graphs).  ``family_tag`` records how the
    graph was generated, e.g. ``("cycle", 5)`` or ``("union", 5, tag_g, tag_h)``.
    """

    n: int
    adj: tuple[int, ...]
    labels: Sequence | None = None
    family_tag: tuple | None = None

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise DomainError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for v, row in enumerate(self.adj):
            if row < 0 or row >> self.n:
                raise DomainError(f"row {v} references vertices outside 0..{self.n - 1}")
            if row >> v & 1:
                raise DomainError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise DomainError(f"asymmetric adjacency between {v} and {u}")
        if self.labels is not None and len(self.labels) != self.n:
            raise DomainError("labels length differs from vertex count")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], **kw) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), **kw)

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def is_regular(self) -> bool:
        return self.n == 0 or len(set(self.degrees())) == 1

    def vertex_set(self, vertices: Iterable[int] = ()) -> VertexSet:
        return VertexSet.of(self.n, vertices)

    def same_edges(self, other: "Graph") -> bool:
        return self.n == other.n and self.adj == other.adj

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.same_edges(other) and self.family_tag == other.family_tag

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        tag = f", tag={self.family_tag!r}" if self.family_tag else ""
        return f"Graph(n={self.n}, m={self.m}{tag})"


def _trusted(n: int, adj: Sequence[int], labels=None, family_tag=None) -> Graph:
    # skips validation; only for constructions that are symmetric by design
    g = object.__new__(Graph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "adj", tuple(adj))
    object.__setattr__(g, "labels", labels)
    object.__setattr__(g, "family_tag", family_tag)
    return g


# --------------------------------------------------------------------------
# Named families
# --------------------------------------------------------------------------

def cycle(length: int) -> Graph:
    if length < 3:
        raise ParameterError(f"cycle needs length >= 3, got {length}")
    edges = [(i, (i + 1) % length) for i in range(length)]
    return Graph.from_edges(length, edges, family_tag=("cycle", length))


def path(length: int) -> Graph:
    if length < 1:
        raise ParameterError(f"path needs >= 1 vertex, got {length}")
    return Graph.from_edges(length, [(i, i + 1) for i in range(length - 1)], family_tag=("path", length))


def complete(k: int) -> Graph:
    if k < 1:
        raise ParameterError(f"complete graph needs k >= 1, got {k}")
    full = (1 << k) - 1
    return Graph(k, tuple(full & ~(1 << v) for v in range(k)), family_tag=("complete", k))


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise ParameterError(f"complete bipartite needs m, n >= 1, got {m}, {n}")
    edges = [(u, m + v) for u in range(m) for v in range(n)]
    return Graph.from_edges(m + n, edges, family_tag=("complete_bipartite", m, n))


def star(k: int) -> Graph:
    """K_{1,k}: centre 0, leaves 1..k."""
    if k < 1:
        raise ParameterError(f"star needs k >= 1 leaves, got {k}")
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)], family_tag=("star", k))


def kneser(n: int, k: int) -> Graph:
    """k-subsets of {0..n-1}, adjacent iff disjoint; subsets in lexicographic order."""
    if not (n >= k >= 1):
        raise ParameterError(f"kneser needs n >= k >= 1, got n={n}, k={k}")
    subsets = list(itertools.combinations(range(n), k))
    masks = [bits_of(s) for s in subsets]
    adj = [0] * len(subsets)
    for i, a in enumerate(masks):
        for j in range(i + 1, len(masks)):
            if not a & masks[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(len(subsets), tuple(adj), labels=tuple(subsets), family_tag=("kneser", n, k))


def circular(n: int, d: int) -> Graph:
    """Circular complete graph K_{n/d}: i ~ j iff d <= |i - j| <= n - d."""
    if d < 1 or n < 2 * d:
        raise ParameterError(f"circular complete graph needs d >= 1 and n >= 2d, got n={n}, d={d}")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if d <= j - i <= n - d]
    return Graph.from_edges(n, edges, family_tag=("circular", n, d))


def petersen() -> Graph:
    g = kneser(5, 2)
    return Graph(g.n, g.adj, labels=g.labels, family_tag=("petersen",))


_FAMILIES = {
    "cycle": (cycle, 1),
    "path": (path, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "star": (star, 1),
    "kneser": (kneser, 2),
    "circular": (circular, 2),
    "petersen": (petersen, 0),
}
_ALIASES = {"c": "cycle", "k": "complete", "p": "path", "kb": "complete_bipartite",
            "bipartite": "complete_bipartite", "kn": "kneser"}


def parse_family(spec: str | Sequence) -> tuple:
    """Turn ``"kneser:5:2"`` (or a tuple) into ``("kneser", 5, 2)``."""
    if isinstance(spec, str):
        parts = [p.strip() for p in spec.split(":")]
        name = parts[0].lower().replace("-", "_")
        name = _ALIASES.get(name, name)
        try:
            params = [int(p) for p in parts[1:]]
        except ValueError:
            raise ParameterError(f"non-integer parameter in family spec {spec!r}") from None
        return (name, *params)
    return tuple(spec)


def generate(family: str | Sequence) -> Graph:
    """Build the canonical labelled graph of a named family."""
    name, *params = parse_family(family)
    if name not in _FAMILIES:
        raise ParameterError(f"unknown family {name!r}; known: {', '.join(sorted(_FAMILIES))}")
    fn, arity = _FAMILIES[name]
    if len(params) != arity:
        raise ParameterError(f"family {name!r} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


def from_family_tag(tag: tuple) -> Graph:
    """Rebuild a graph from its family tag (generators, products, powers, unions)."""
    kind = tag[0]
    if kind == "product":
        return tensor_product(from_family_tag(tag[1]), from_family_tag(tag[2]))
    if kind == "power":
        return tensor_power(from_family_tag(tag[1]), tag[2])
    if kind == "union":
        return disjoint_union(from_family_tag(tag[2]), from_family_tag(tag[3]))
    return generate(tag)


# --------------------------------------------------------------------------
# Constructors
# --------------------------------------------------------------------------

def _check_guard(what: str, size: int, guard: int | None) -> None:
    limit = DEFAULT_VERTEX_GUARD if guard is None else guard
    if size > limit:
        raise SizeGuardError(what, size, limit)


def tensor_product(g: Graph, h: Graph, guard: int | None = None) -> Graph:
    """Categorical product; vertex (u, v) has index ``u * h.n + v``."""
    if g.n == 0 or h.n == 0:
        raise DomainError("tensor product of an empty graph")
    _check_guard("tensor product", g.n * h.n, guard)
    nh = h.n
    # blocks of width nh never overlap, so a product of bitsets is a plain OR of shifted rows
    spread = [sum(1 << (w * nh) for w in iter_bits(g.adj[u])) for u in range(g.n)]
    adj = [spread[u] * h.adj[v] for u in range(g.n) for v in range(nh)]
    tag = None
    if g.family_tag is not None and h.family_tag is not None:
        tag = ("product", g.family_tag, h.family_tag)
    return _trusted(g.n * nh, adj, ProductCoords((g.n, nh)), tag)


def tensor_power(g: Graph, k: int, guard: int | None = None) -> Graph:
    if k < 1:
        raise ParameterError(f"power must be >= 1, got {k}")
    _check_guard("tensor power", g.n ** k, guard)
    result = g
    for _ in range(k - 1):
        result = tensor_product(result, g, guard)
    tag = ("power", g.family_tag, k) if g.family_tag is not None else None
    return _trusted(result.n, result.adj, ProductCoords((g.n,) * k), tag)


def multi_product(graphs: Sequence[Graph], guard: int | None = None) -> Graph:
    size = 1
    for g in graphs:
        size *= g.n
    _check_guard("tensor product", size, guard)
    result = graphs[0]
    for g in graphs[1:]:
        result = tensor_product(result, g, guard)
    return _trusted(result.n, result.adj, ProductCoords([g.n for g in graphs]), result.family_tag)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    adj = list(g.adj) + [row << shift for row in h.adj]
    return _trusted(g.n + h.n, adj, None, ("union", g.n, g.family_tag, h.family_tag))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return _trusted(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)])


def induced_subgraph(g: Graph, vertices: VertexSet | Iterable[int], family_tag=None) -> Graph:
    """Subgraph induced on ``vertices``, relabelled 0.. in increasing order."""
    keep = vertices.to_list() if isinstance(vertices, VertexSet) else sorted(set(vertices))
    pos = {v: i for i, v in enumerate(keep)}
    adj = [bits_of(pos[u] for u in iter_bits(g.adj[v]) if u in pos) for v in keep]
    labels = [g.labels[v] for v in keep] if g.labels is not None else None
    return _trusted(len(keep), adj, labels, family_tag)


def neighborhood(g: Graph, s: VertexSet) -> VertexSet:
    """Union of the neighbourhoods of the members of ``s`` (may meet ``s``)."""
    if s.n != g.n:
        raise DomainError(f"vertex set universe {s.n} does not match graph order {g.n}")
    return VertexSet(neighborhood_bits(g.adj, s.bits), g.n)


def neighborhood_bits(adj: Sequence[int], bits: int) -> int:
    out = 0
    for v in iter_bits(bits):
        out |= adj[v]
    return out


def is_independent_bits(adj: Sequence[int], bits: int) -> bool:
    return all(not adj[v] & bits for v in iter_bits(bits))


def components(g: Graph) -> list[VertexSet]:
    """Connected components, ordered by smallest member."""
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = neighborhood_bits(g.adj, frontier) & ~comp
            comp |= nxt
            frontier = nxt
        seen |= comp
        out.append(VertexSet(comp, g.n))
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


# --------------------------------------------------------------------------
# Symmetry
# --------------------------------------------------------------------------

def _tag_transitive(tag) -> bool | None:
    if tag is None:
        return None
    kind = tag[0]
    if kind in ("cycle", "complete", "kneser", "circular", "petersen"):
        return True
    if kind == "complete_bipartite":
        return True if tag[1] == tag[2] else None
    if kind == "product":
        return True if _tag_transitive(tag[1]) and _tag_transitive(tag[2]) else None
    if kind == "power":
        return _tag_transitive(tag[1])
    return None


def _vertex_classes(g: Graph) -> list[tuple]:
    deg = g.degrees()
    return [(deg[v], tuple(sorted(deg[u] for u in iter_bits(g.adj[v])))) for v in range(g.n)]


def _bfs_order(g: Graph) -> list[int]:
    """BFS order per component, so every non-root vertex follows a neighbour."""
    order: list[int] = []
    seen = 0
    for s in range(g.n):
        if seen >> s & 1:
            continue
        seen |= 1 << s
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            for u in iter_bits(g.adj[v] & ~seen):
                seen |= 1 << u
                queue.append(u)
    return order


def _find_isomorphism(g: Graph, h: Graph, order: list[int], cls_g: list[tuple], cls_h: list[tuple],
                      first: int | None = None) -> list[int] | None:
    """Backtracking map g -> h preserving classes and adjacency; ``first`` pins the image of order[0]."""
    n = g.n
    gadj, hadj = g.adj, h.adj
    image = [-1] * n
    used = 0
    pos = {v: i for i, v in enumerate(order)}
    # for each position i, the earlier positions adjacent to order[i]
    back = [[pos[u] for u in iter_bits(gadj[v]) if pos[u] < i] for i, v in enumerate(order)]

    def consistent(i: int, c: int) -> bool:
        v = order[i]
        for j in range(i):
            w = order[j]
            if bool(gadj[v] >> w & 1) != bool(hadj[c] >> image[w] & 1):
                return False
        return True

    def extend(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        if i == 0 and first is not None:
            pool = 1 << first
        elif back[i]:
            pool = hadj[image[order[back[i][0]]]]
        else:
            pool = (1 << n) - 1
        for c in iter_bits(pool & ~used):
            if cls_h[c] != cls_g[v] or not consistent(i, c):
                continue
            image[v] = c
            used |= 1 << c
            if extend(i + 1):
                return True
            used &= ~(1 << c)
            image[v] = -1
        return False

    return list(image) if extend(0) else None


def is_vertex_transitive(g: Graph, guard: int = DEFAULT_TRANSITIVITY_GUARD) -> bool | None:
    """Decide whether Aut(g) acts transitively on the vertices.

    Returns ``None`` (unknown) when the graph is larger than ``guard`` and its
    family tag does not settle the question.
    """
    by_tag = _tag_transitive(g.family_tag)
    if by_tag:
        return True
    if g.n <= 1:
        return True
    if len(set(g.degrees())) > 1:
        return False
    if g.n > guard:
        return None
    cls = _vertex_classes(g)
    if len(set(cls)) > 1:
        return False
    order = _bfs_order(g)
    orbit = 1
    autos: list[list[int]] = []
    for t in range(1, g.n):
        if orbit >> t & 1:
            continue
        sigma = _find_isomorphism(g, g, order, cls, cls, first=t)
        if sigma is None:
            return False
        autos.append(sigma)
        frontier = orbit
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                for a in autos:
                    nxt |= 1 << a[v]
            nxt &= ~orbit
            orbit |= nxt
            frontier = nxt
    return True


def canonical_form(g: Graph) -> tuple[int, int]:
    """Isomorphism-invariant key ``(n, code)`` for small graphs.

    ``code`` is the minimum upper-triangle adjacency encoding over all
    relabellings that list vertices class by class, where a vertex's class is
    its degree together with its neighbours' degrees.
    """
    n = g.n
    cls = _vertex_classes(g)
    groups: dict[tuple, list[int]] = {}
    for v in range(n):
        groups.setdefault(cls[v], []).append(v)
    keys = sorted(groups, reverse=True)
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    best = None
    for choice in itertools.product(*(itertools.permutations(groups[k]) for k in keys)):
        p = [v for block in choice for v in block]
        code = 0
        for i, j in pairs:
            code = code << 1 | (g.adj[p[i]] >> p[j] & 1)
        if best is None or code < best:
            best = code
    return (n, best or 0)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    cls_g, cls_h = _vertex_classes(g), _vertex_classes(h)
    if sorted(cls_g) != sorted(cls_h):
        return False
    return _find_isomorphism(g, h, _bfs_order(g), cls_g, cls_h) is not None


__all__ = [
    "DEFAULT_VERTEX_GUARD", "DEFAULT_TRANSITIVITY_GUARD", "Graph", "VertexSet", "ProductCoords",
    "cycle", "path", "complete", "complete_bipartite", "star", "kneser", "circular", "petersen",
    "generate", "parse_family", "from_family_tag", "tensor_product", "tensor_power", "multi_product",
    "disjoint_union", "complement", "induced_subgraph", "neighborhood", "components", "is_connected",
    "is_vertex_transitive", "canonical_form", "is_isomorphic", "iter_bits", "bits_of",
]
