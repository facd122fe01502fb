"""Deciding word equivalence and computing lexicographic normal forms.

Two deciders live here.  ``enumerate_class`` is the brute-force oracle: a
breadth-first closure of a word under single relation applications, valid for
C(3) presentations because their equivalence classes are finite.  ``wp_prefix``
is the fast decision procedure for C(4) presentations; it repeatedly inspects
the front of both words, either deleting a common first letter or resolving a
clean overlap prefix against the matching relation word, while threading a
piece argument that remembers how the previous step was resolved.  With an
empty piece argument it decides exactly the word problem.

The recursion of the procedure only ever touches a bounded window at the
front of each word, so both words are kept as views (consumed prefix pointer
plus a short prepend buffer) and the whole run costs time linear in the input
length.
"""

from dataclasses import dataclass

from . import presentation as pres
from .errors import ClassSizeCapError, NotSmallOverlapError, WordDomainError

LT, EQ, GT = -1, 0, 1

DEFAULT_CLASS_CAP = 10**6


def one_step_neighbors(w, presentation):
    """All words obtained from ``w`` by one application of one relation.

    Every occurrence of either side of a relation may be replaced by the
    other side; an empty relation word occurs at every position boundary.
    """
    out = set()
    for x, y in presentation.relations:
        for a, b in ((x, y), (y, x)):
            if a == "":
                for i in range(len(w) + 1):
                    out.add(w[:i] + b + w[i:])
                continue
            start = w.find(a)
            while start != -1:
                out.add(w[:start] + b + w[start + len(a) :])
                start = w.find(a, start + 1)
    out.discard(w)
    return out


@dataclass(frozen=True)
class EquivClass:
    """A full equivalence class with its lexicographically minimal member."""

    representative: str
    members: frozenset


def enumerate_class(w, presentation, order=None, cap=DEFAULT_CLASS_CAP):
    """Breadth-first closure of ``w`` under one-step rewriting.

    Terminates for C(3) presentations (classes are finite); the safety cap
    guards against weaker presentations or bugs and raises when exceeded.
    """
    presentation.check_word(w)
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for word in frontier:
            for other in one_step_neighbors(word, presentation):
                if other not in seen:
                    seen.add(other)
                    if len(seen) > cap:
                        raise ClassSizeCapError(
                            f"class of {w!r} exceeded cap of {cap} members"
                        )
                    nxt.append(other)
        frontier = nxt
    key = lex_key_function(presentation, order)
    return EquivClass(representative=min(seen, key=key), members=frozenset(seen))


def lex_compare(u, v, order):
    """Compare two words in the lexicographic order induced by ``order``.

    The empty word precedes everything and a proper prefix precedes its
    extensions, so the order is total but has infinite descending chains
    (b, ab, aab, ...): it is not a well-order.
    """
    rank = {letter: i for i, letter in enumerate(order)}
    for a, b in zip(u, v):
        if a != b:
            return LT if rank[a] < rank[b] else GT
    if len(u) == len(v):
        return EQ
    return LT if len(u) < len(v) else GT


def lex_key_function(presentation, order=None):
    """Sort key realising the lexicographic order (declaration order by
    default)."""
    letters = tuple(order) if order is not None else presentation.alphabet
    if sorted(letters) != sorted(presentation.alphabet):
        raise WordDomainError("order must be a permutation of the alphabet")
    rank = {letter: i for i, letter in enumerate(letters)}
    return lambda w: tuple(rank[c] for c in w)


def normal_form(w, presentation, order=None, cap=DEFAULT_CLASS_CAP):
    """The lexicographically minimal member of the class of ``w``."""
    key = lex_key_function(presentation, order)
    cls = enumerate_class(w, presentation, order, cap)
    return min(cls.members, key=key)


class _WordTail:
    """The not-yet-consumed part of a word: a short prepended buffer plus a
    suffix of the original input addressed by offset.  Keeps every engine
    step O(window) instead of O(word)."""

    __slots__ = ("head", "base", "pos")

    def __init__(self, word):
        self.head = ""
        self.base = word
        self.pos = 0

    def __len__(self):
        return len(self.head) + len(self.base) - self.pos

    def is_empty(self):
        return not self.head and self.pos >= len(self.base)

    def first(self):
        if self.head:
            return self.head[0]
        return self.base[self.pos]

    def peek(self, n):
        head = self.head
        if len(head) >= n:
            return head[:n]
        return head + self.base[self.pos : self.pos + n - len(head)]

    def startswith(self, s):
        return self.peek(len(s)) == s

    def advance(self, n):
        take = min(n, len(self.head))
        if take:
            self.head = self.head[take:]
            n -= take
        self.pos += n

    def prepend(self, s):
        if s:
            self.head = s + self.head


def _common_suffix(a, b):
    n = 0
    while n < len(a) and n < len(b) and a[len(a) - 1 - n] == b[len(b) - 1 - n]:
        n += 1
    return a[len(a) - n :] if n else ""


def wp_prefix(u, v, table, piece=""):
    """Decide the word problem query with a piece argument.

    Requires a C(4) presentation and ``piece`` among its pieces.  With
    ``piece == ""`` the answer is True exactly when ``u`` and ``v`` are
    equivalent; non-empty piece arguments arise internally from resolved
    overlaps and are exposed for completeness.
    """
    if piece not in table.pieces:
        raise WordDomainError(f"{piece!r} is not a piece of the presentation")
    if not table.satisfies(4):
        table.require(4)
    presentation = table.presentation
    presentation.check_word(u)
    presentation.check_word(v)

    facts = table.factorizations
    complement = table.complement
    patterns = [f for f in facts.values()]
    max_pattern = table.max_pattern_length
    activity_window = max_pattern + table.max_piece_length

    ut = _WordTail(u)
    vt = _WordTail(v)
    p = piece

    # Each overlap step strictly shrinks the unconsumed part of the original
    # input while prepending at most one maximal piece suffix, so the run
    # length is linear in the input with slope bounded by the relation width.
    width = presentation.max_relation_length
    budget = (width + 4) * (len(u) + len(v)) + 64 * (width + 1)
    while True:
        budget -= 1
        if budget < 0:
            raise RuntimeError(
                "word problem engine exceeded its step budget; "
                "the presentation may violate its contract"
            )
        if ut.is_empty() or vt.is_empty():
            return ut.is_empty() and vt.is_empty() and p == ""

        match = None
        window = ut.peek(max_pattern)
        for fact in patterns:
            pattern = fact.overlap_pattern
            if fact.middle and window.startswith(pattern):
                match = fact
                break

        if match is None:
            a = ut.first()
            if a != vt.first():
                return False
            if p and p[0] != a:
                return False
            ut.advance(1)
            vt.advance(1)
            p = p[1:]
            continue

        x, y, z = match.prefix, match.middle, match.suffix
        partner = facts[complement[match.word]]
        xb, zb = partner.prefix, partner.suffix
        if not (x.startswith(p) or xb.startswith(p)):
            return False
        xy = x + y
        xybar = partner.overlap_pattern
        v_pattern = vt.startswith(xy)
        v_pattern_bar = vt.startswith(xybar)
        if not (v_pattern or v_pattern_bar):
            return False

        xyz = xy + z
        xyzbar = xybar + zb
        u_full = ut.startswith(xyz)

        if v_pattern:
            if u_full and vt.startswith(xyz):
                ut.advance(len(xyz))
                vt.advance(len(xyz))
                glue = z if _tail_active(z, ut, table, activity_window) else zb
                ut.prepend(glue)
                vt.prepend(glue)
                p = ""
            else:
                ut.advance(len(xy))
                vt.advance(len(xy))
                p = "" if x.startswith(p) else z
            continue

        v_full_bar = vt.startswith(xyzbar)
        if u_full and v_full_bar:
            ut.advance(len(xyz))
            vt.advance(len(xyzbar))
            glue = z if _tail_active(z, ut, table, activity_window) else zb
            ut.prepend(glue)
            vt.prepend(glue)
            p = ""
        elif v_full_bar:
            ut.advance(len(xy))
            vt.advance(len(xyzbar))
            vt.prepend(z)
            p = ""
        elif u_full:
            ut.advance(len(xyz))
            ut.prepend(zb)
            vt.advance(len(xybar))
            p = ""
        else:
            zc = _common_suffix(z, zb)
            z1 = z[: len(z) - len(zc)]
            z2 = zb[: len(zb) - len(zc)]
            ut.advance(len(xy))
            vt.advance(len(xybar))
            if not (ut.startswith(z1) and vt.startswith(z2)):
                return False
            ut.advance(len(z1))
            vt.advance(len(z2))
            p = zc


def _tail_active(piece, tail, table, window):
    if not piece:
        return False
    return pres.is_piece_active(piece, tail.peek(window), table)


def equiv(u, v, table):
    """Whether ``u`` and ``v`` denote the same element.

    For semigroup presentations the question only makes sense for non-empty
    words, so empty inputs are rejected there.
    """
    if table.presentation.mode == pres.SEMIGROUP and (u == "" or v == ""):
        raise WordDomainError("empty words are outside a semigroup's domain")
    return wp_prefix(u, v, table)
