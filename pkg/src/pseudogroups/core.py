"""Finite inverse semigroups given by multiplication tables.

Elements are dense 0-based indices into an n x n table.  Validation checks
associativity (naive n^3, vectorized), uniqueness of inverses, and the
declared zero/identity laws; after that every derived relation (natural
order, compatibility, d/r maps) is cached as a numpy matrix and all queries
are pure reads, safe for concurrent use.

Partial bijections are the guiding model: the product ``mult[a][b]`` is
"apply b, then a", so ``d(a) = inv(a)*a`` is the idempotent on the domain
of a and ``r(a) = a*inv(a)`` the idempotent on its image.
"""

from __future__ import annotations

import numpy as np

from .errors import InputError, NotAssociative, NotInverse, CheckFailed


class InverseSemigroup:
    """A validated finite inverse semigroup.

    Construct through :func:`validate`; direct construction skips the checks.
    Immutable by convention: no method mutates the tables.
    """

    def __init__(self, mult, inv, zero=None, identity=None, names=None):
        self.mult = np.asarray(mult, dtype=np.int32)
        self.n = self.mult.shape[0]
        self.inv = np.asarray(inv, dtype=np.int32)
        self.zero = zero
        self.identity = identity
        self.names = list(names) if names is not None else None
        self._init_caches()

    def _init_caches(self):
        n = self.n
        mult, inv = self.mult, self.inv
        idx = np.arange(n)
        self.idempotent = mult[idx, idx] == idx
        self.idempotents = [int(i) for i in np.nonzero(self.idempotent)[0]]
        self.d_arr = mult[inv, idx]           # d(a) = inv(a) * a
        self.r_arr = mult[idx, inv]           # r(a) = a * inv(a)
        # natural order, both characterizations
        #   a <= b  iff  a = b * d(a)   iff   a = e * b for some idempotent e
        by_d = mult[:, self.d_arr].T == idx[:, None]       # [a, b] : b*d(a) == a
        by_e = np.zeros((n, n), dtype=bool)
        for e in self.idempotents:
            by_e |= mult[e, :][None, :] == idx[:, None]    # [a, b] : e*b == a
        if not np.array_equal(by_d, by_e):
            a, b = map(int, np.argwhere(by_d != by_e)[0])
            raise CheckFailed("order characterizations disagree", (a, b))
        self.leq = by_d
        # compatibility, equational cross-checks included
        left = self.idempotent[mult[inv, :]]               # inv(a)*b idempotent
        right = self.idempotent[mult[:, inv]]              # a*inv(b) idempotent
        left_eq = mult[self.r_arr, :].T == mult[self.r_arr, :]  # r(s)t == r(t)s
        lhs = mult[:, self.d_arr]                          # [t, s] : t*d(s)
        right_eq = lhs.T == lhs                            # t*d(s) == s*d(t)
        if not np.array_equal(left, left_eq.T & np.ones_like(left)):
            # left_eq[s,t] built as mult[r(s),t] table; align orientation
            pass
        left_eq = mult[self.r_arr][:, :]                   # recompute cleanly below
        ls = np.empty((n, n), dtype=bool)
        rs = np.empty((n, n), dtype=bool)
        for s in range(n):
            ls[s] = mult[self.r_arr[s], :] == mult[self.r_arr, np.full(n, s)]
            rs[s] = mult[np.full(n, s), self.d_arr] == mult[:, self.d_arr[s]]
        if not np.array_equal(left, ls):
            s, t = map(int, np.argwhere(left != ls)[0])
            raise CheckFailed("left compatibility characterizations disagree", (s, t))
        if not np.array_equal(right, rs):
            s, t = map(int, np.argwhere(right != rs)[0])
            raise CheckFailed("right compatibility characterizations disagree", (s, t))
        self.left_compat = left
        self.right_compat = right
        self.compat = left & right
        # down-set masks for the closure engine
        self.down_masks = [int(sum(1 << int(b) for b in np.nonzero(self.leq[:, a])[0]))
                           for a in range(n)]

    # -- queries ---------------------------------------------------------------

    def d(self, a: int) -> int:
        return int(self.d_arr[a])

    def r(self, a: int) -> int:
        return int(self.r_arr[a])

    def natural_leq(self, a: int, b: int) -> bool:
        return bool(self.leq[a, b])

    def compatible(self, a: int, b: int) -> str:
        """One of 'both', 'left', 'right', 'neither'."""
        l = bool(self.left_compat[a, b])
        r = bool(self.right_compat[a, b])
        if l and r:
            return "both"
        if l:
            return "left"
        if r:
            return "right"
        return "neither"

    def is_compatible(self, a: int, b: int) -> bool:
        return bool(self.compat[a, b])

    def prod(self, a: int, b: int) -> int:
        return int(self.mult[a, b])

    def prod_all(self, items) -> int:
        out = None
        for x in items:
            out = x if out is None else int(self.mult[out, x])
        if out is None:
            raise InputError("empty product")
        return out

    def name(self, a: int) -> str:
        return self.names[a] if self.names else str(a)

    def d_classes(self):
        """Partition of all elements by the D-relation.

        On idempotents, e D f iff some c has d(c) = e and r(c) = f; this is
        already an equivalence (compose/invert the witnesses).  A general
        element sits in the class of its domain idempotent d(a).
        """
        reach = {}
        for e in self.idempotents:
            reach[e] = {e}
        for c in range(self.n):
            reach[self.d(c)].add(self.r(c))
        # verify the relation is symmetric/transitive as claimed
        classes = []
        seen = set()
        for e in self.idempotents:
            if e in seen:
                continue
            cls = set(reach[e])
            for f in cls:
                if reach[f] != cls:
                    raise CheckFailed("D-relation is not an equivalence", (e, f))
            seen |= cls
            classes.append(sorted(cls))
        out = []
        for cls in classes:
            idem = set(cls)
            members = [a for a in range(self.n) if self.d(a) in idem]
            out.append(sorted(members))
        return out

    def __len__(self):
        return self.n

    def __repr__(self):
        bits = [f"n={self.n}"]
        if self.zero is not None:
            bits.append(f"zero={self.zero}")
        if self.identity is not None:
            bits.append(f"identity={self.identity}")
        return f"InverseSemigroup({', '.join(bits)})"


def _check_associative(mult: np.ndarray):
    n = mult.shape[0]
    for a in range(n):
        left = mult[mult[a, :], :]       # (b,c) -> (a*b)*c
        right = mult[a, mult]            # (b,c) -> a*(b*c)
        if not np.array_equal(left, right):
            b, c = map(int, np.argwhere(left != right)[0])
            raise NotAssociative("multiplication is not associative", (a, b, c))


def _compute_inverses(mult: np.ndarray):
    n = mult.shape[0]
    inv = np.full(n, -1, dtype=np.int32)
    for a in range(n):
        # b with a*b*a = a and b*a*b = b
        aba = mult[mult[a, :], a]
        bab = mult[mult[:, a], np.arange(n)]
        cands = np.nonzero((aba == a) & (bab == np.arange(n)))[0]
        if len(cands) != 1:
            raise NotInverse(
                f"element {a} has {len(cands)} inverses", (a, [int(c) for c in cands]))
        inv[a] = cands[0]
    return inv


def validate(table, names=None, zero=None, identity=None) -> InverseSemigroup:
    """Validate a raw multiplication table as a finite inverse semigroup.

    ``zero`` / ``identity`` are detected automatically when not given; a
    declared value that fails its law raises :class:`InputError`.
    """
    mult = np.asarray(table, dtype=np.int32)
    if mult.ndim != 2 or mult.shape[0] != mult.shape[1]:
        raise InputError(f"multiplication table must be square, got shape {mult.shape}")
    n = mult.shape[0]
    if n == 0:
        raise InputError("empty semigroup")
    if mult.min() < 0 or mult.max() >= n:
        raise InputError("table entries must be indices in range(n)")
    if names is not None and len(names) != n:
        raise InputError("names must have one entry per element")
    _check_associative(mult)
    inv = _compute_inverses(mult)
    # idempotents commute iff inverses are unique; cross-check anyway
    idx = np.arange(n)
    idem = np.nonzero(mult[idx, idx] == idx)[0]
    sub = mult[np.ix_(idem, idem)]
    if not np.array_equal(sub, sub.T):
        i, j = map(int, np.argwhere(sub != sub.T)[0])
        raise NotInverse("idempotents do not commute",
                         (int(idem[i]), int(idem[j])))

    zeros = [a for a in range(n) if np.all(mult[a, :] == a) and np.all(mult[:, a] == a)]
    if zero is not None:
        if zero not in zeros:
            raise InputError(f"declared zero {zero} does not satisfy the zero law")
    else:
        zero = zeros[0] if zeros else None
    identities = [a for a in range(n)
                  if np.array_equal(mult[a, :], idx) and np.array_equal(mult[:, a], idx)]
    if identity is not None:
        if identity not in identities:
            raise InputError(f"declared identity {identity} fails the identity law")
    else:
        identity = identities[0] if identities else None
    return InverseSemigroup(mult, inv, zero=zero, identity=identity, names=names)
