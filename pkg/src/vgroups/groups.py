"""Finite groups as Cayley tables, with the subgroup machinery the
categorical constructions need: normality tests with conjugation
witnesses, closures, cosets and brute-force isomorphism search.

Group laws are checked exhaustively at construction; carriers stay small
enough (at most a few dozen elements) that cubic scans are free.
"""

from itertools import permutations, product

from .errors import StructuralError


class FiniteGroup:
    __slots__ = ("names", "table", "identity", "inverse")

    def __init__(self, table, names=None):
        table = tuple(tuple(row) for row in table)
        n = len(table)
        if n == 0:
            raise StructuralError("empty Cayley table")
        for row in table:
            if len(row) != n:
                raise StructuralError("Cayley table must be square")
            for v in row:
                if not isinstance(v, int) or not 0 <= v < n:
                    raise StructuralError(f"Cayley entry out of range: {v!r}")
        if names is None:
            names = tuple(str(i) for i in range(n))
        else:
            names = tuple(str(x) for x in names)
            if len(names) != n or len(set(names)) != n:
                raise StructuralError("element names must be distinct, one per element")
        identity = None
        for e in range(n):
            if all(table[e][x] == x == table[x][e] for x in range(n)):
                identity = e
                break
        if identity is None:
            raise StructuralError("Cayley table has no identity element")
        inverse = []
        for x in range(n):
            inv = [y for y in range(n)
                   if table[x][y] == identity and table[y][x] == identity]
            if len(inv) != 1:
                raise StructuralError(f"element {names[x]} has no unique inverse")
            inverse.append(inv[0])
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if table[table[x][y]][z] != table[x][table[y][z]]:
                        raise StructuralError(
                            f"Cayley table not associative at "
                            f"({names[x]}, {names[y]}, {names[z]})")
        self.names = names
        self.table = table
        self.identity = identity
        self.inverse = tuple(inverse)

    @property
    def size(self):
        return len(self.table)

    def op(self, i, j):
        return self.table[i][j]

    def inv(self, i):
        return self.inverse[i]

    def sub(self, i, j):
        """i + (-j), the right difference."""
        return self.table[i][self.inverse[j]]

    def conj(self, g, x):
        """g + x + (-g)."""
        return self.table[self.table[g][x]][self.inverse[g]]

    @property
    def is_abelian(self):
        n = self.size
        return all(self.table[i][j] == self.table[j][i]
                   for i in range(n) for j in range(n))

    @classmethod
    def trivial(cls):
        return cls([[0]], names=["0"])

    @classmethod
    def cyclic(cls, n):
        if n < 1:
            raise StructuralError("cyclic group order must be positive")
        return cls([[(i + j) % n for j in range(n)] for i in range(n)],
                   names=[str(i) for i in range(n)])

    @classmethod
    def direct_product(cls, a, b):
        na, nb = a.size, b.size
        def idx(i, j):
            return i * nb + j
        table = [[0] * (na * nb) for _ in range(na * nb)]
        for i1 in range(na):
            for j1 in range(nb):
                for i2 in range(na):
                    for j2 in range(nb):
                        table[idx(i1, j1)][idx(i2, j2)] = idx(a.op(i1, i2), b.op(j1, j2))
        names = [f"({a.names[i]},{b.names[j]})" for i in range(na) for j in range(nb)]
        return cls(table, names=names)

    @classmethod
    def symmetric3(cls):
        """The permutations of three points, composed left to right."""
        perms = [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]
        def compose(p, q):
            # apply p first, then q
            return tuple(q[p[i]] for i in range(3))
        index = {p: i for i, p in enumerate(perms)}
        table = [[index[compose(p, q)] for q in perms] for p in perms]
        names = ["".join(str(v) for v in p) for p in perms]
        return cls(table, names=names)

    # -- subgroup machinery ------------------------------------------------

    def is_subgroup(self, subset):
        s = set(subset)
        if self.identity not in s:
            return False
        return all(self.op(x, y) in s for x in s for y in s) and \
            all(self.inv(x) in s for x in s)

    def normality_witness(self, subset):
        """A pair (g, n) with g + n - g outside the subset, or None."""
        s = set(subset)
        for g in range(self.size):
            for n in s:
                if self.conj(g, n) not in s:
                    return (g, n)
        return None

    def is_normal_subgroup(self, subset):
        return self.is_subgroup(subset) and self.normality_witness(subset) is None

    def subgroup_closure(self, generators):
        s = {self.identity}
        frontier = set(generators)
        while frontier:
            s |= frontier
            frontier = {self.op(x, y) for x in s for y in s} | \
                       {self.inv(x) for x in s}
            frontier -= s
        return tuple(sorted(s))

    def normal_closure(self, subset):
        closed = set(self.subgroup_closure(subset))
        while True:
            conjugates = {self.conj(g, n) for g in range(self.size) for n in closed}
            grown = set(self.subgroup_closure(closed | conjugates))
            if grown == closed:
                return tuple(sorted(closed))
            closed = grown

    def all_subgroups(self):
        """Every subgroup, as sorted index tuples (carriers <= ~8 only)."""
        n = self.size
        found = set()
        for bits in range(1 << n):
            if not bits & (1 << self.identity):
                continue
            subset = tuple(i for i in range(n) if bits & (1 << i))
            if self.is_subgroup(subset):
                found.add(subset)
        return sorted(found)

    def all_normal_subgroups(self):
        return [s for s in self.all_subgroups()
                if self.normality_witness(s) is None]

    def cosets(self, normal_subset):
        """Left cosets of a normal subgroup, each sorted, listed by least member."""
        s = set(normal_subset)
        seen = set()
        cosets = []
        for x in range(self.size):
            if x in seen:
                continue
            coset = tuple(sorted(self.op(x, m) for m in s))
            seen.update(coset)
            cosets.append(coset)
        return sorted(cosets, key=lambda c: c[0])

    def _key(self):
        return (self.table, self.names)

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"FiniteGroup(order {self.size})"


def subgroup_group(group, subset):
    """The subgroup on a sorted subset, reindexed, with inherited names."""
    subset = tuple(sorted(subset))
    if not group.is_subgroup(subset):
        raise StructuralError("subset is not a subgroup")
    pos = {x: i for i, x in enumerate(subset)}
    table = [[pos[group.op(x, y)] for y in subset] for x in subset]
    return FiniteGroup(table, names=[group.names[x] for x in subset])


def quotient_group(group, normal_subset):
    """Quotient by a normal subgroup.

    Returns (quotient, projection) where projection[x] is the index of
    the coset of x; cosets are ordered by their least member and named
    after it.
    """
    witness = group.normality_witness(normal_subset)
    if not group.is_subgroup(normal_subset) or witness is not None:
        raise StructuralError("subset is not a normal subgroup")
    cosets = group.cosets(normal_subset)
    coset_of = {}
    for i, coset in enumerate(cosets):
        for x in coset:
            coset_of[x] = i
    table = [[coset_of[group.op(c[0], d[0])] for d in cosets] for c in cosets]
    names = [f"[{group.names[c[0]]}]" for c in cosets]
    quotient = FiniteGroup(table, names=names)
    projection = tuple(coset_of[x] for x in range(group.size))
    return quotient, projection


def group_isomorphism(g, h):
    """A group isomorphism g -> h as an index mapping, or None.

    Brute force over bijections; fine for the carriers this workbench
    handles (<= 8 elements).
    """
    n = g.size
    if n != h.size:
        return None
    others = [x for x in range(n) if x != g.identity]
    targets = [y for y in range(n) if y != h.identity]
    for perm in permutations(targets):
        mapping = [0] * n
        mapping[g.identity] = h.identity
        for x, y in zip(others, perm):
            mapping[x] = y
        if all(mapping[g.op(x, y)] == h.op(mapping[x], mapping[y])
               for x in range(n) for y in range(n)):
            return tuple(mapping)
    return None


def elements_product(*sizes):
    """Index tuples of a product carrier, in lexicographic order."""
    return list(product(*map(range, sizes)))
