"""Monoid and semigroup presentations and their small overlap combinatorics.

A presentation fixes a finite alphabet and a finite list of relations, each
relating two words over the alphabet.  Two words are equivalent when one can
be rewritten into the other by repeatedly replacing an occurrence of one side
of a relation with the other side.

The analysis here is built on *pieces*: words that occur as a factor of the
relation words in at least two distinct (relation word, position) places,
where overlapping occurrences inside a single relation word count separately.
The empty word is a piece of every presentation.  Every relation word R then
factors as

    R = X · Y · Z

with X the longest prefix of R that is a piece (the maximal piece prefix),
Z the longest such suffix (the maximal piece suffix) and Y the middle word.
A presentation satisfies the small overlap condition C(m) when no relation
word is a product of strictly fewer than m pieces; C(4) is the entry ticket
for everything else in this package.  Equivalently, a presentation is C(4)
exactly when it is C(3) and no middle word is a piece.

Two derived predicates drive the word-problem machinery:

* a word u has a *clean overlap prefix* when X·Y is literally a prefix of u
  for some relation word R = XYZ; under C(4) the relation word involved is
  unique;
* u is *p-active*, for a piece p, when p·u has a prefix of the form a·X·Y
  with |a| < |p| (some clean overlap pattern starts strictly inside p).
"""

import json
from collections import defaultdict
from dataclasses import dataclass, field

from .errors import (
    AmbiguousOverlapError,
    NotSmallOverlapError,
    PresentationSyntaxError,
    WordDomainError,
)

MONOID = "monoid"
SEMIGROUP = "semigroup"

#: Symbols with a fixed internal meaning, never allowed as generators.
RESERVED_SYMBOLS = frozenset({"$", "+"})


@dataclass(frozen=True)
class Presentation:
    """A finite presentation ``⟨alphabet | relations⟩``.

    ``alphabet`` is an ordered tuple of single-character generators; the
    declaration order doubles as the default total order for lexicographic
    normal forms.  ``relations`` is a tuple of (left word, right word) pairs.
    All relation words must be pairwise distinct so that every relation word
    has a unique partner.
    """

    alphabet: tuple
    relations: tuple
    mode: str = MONOID

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(
            self, "relations", tuple((str(x), str(y)) for x, y in self.relations)
        )
        if not self.alphabet:
            raise PresentationSyntaxError("alphabet must be non-empty")
        seen = set()
        for letter in self.alphabet:
            if not isinstance(letter, str) or len(letter) != 1:
                raise PresentationSyntaxError(
                    f"alphabet entries must be single characters, got {letter!r}"
                )
            if letter in RESERVED_SYMBOLS:
                raise PresentationSyntaxError(f"{letter!r} is reserved")
            if letter in seen:
                raise PresentationSyntaxError(f"duplicate letter {letter!r}")
            seen.add(letter)
        if self.mode not in (MONOID, SEMIGROUP):
            raise PresentationSyntaxError(f"unknown mode {self.mode!r}")
        words = set()
        for x, y in self.relations:
            for w in (x, y):
                bad = set(w) - seen
                if bad:
                    raise PresentationSyntaxError(
                        f"relation word {w!r} uses letters outside the alphabet: "
                        f"{sorted(bad)}"
                    )
                if w in words:
                    raise PresentationSyntaxError(f"duplicate relation word {w!r}")
                words.add(w)
                if self.mode == SEMIGROUP and w == "":
                    raise PresentationSyntaxError(
                        "empty relation word not allowed in semigroup mode"
                    )

    @property
    def relation_words(self):
        """All relation words, in declaration order."""
        out = []
        for x, y in self.relations:
            out.append(x)
            out.append(y)
        return tuple(out)

    @property
    def max_relation_length(self):
        return max((len(w) for w in self.relation_words), default=0)

    def check_word(self, w):
        """Raise unless ``w`` is a word over the alphabet (and non-empty in
        semigroup mode where required by the caller)."""
        bad = set(w) - set(self.alphabet)
        if bad:
            raise WordDomainError(
                f"word {w!r} uses letters outside the alphabet: {sorted(bad)}"
            )
        return w


@dataclass(frozen=True)
class Factorization:
    """The X·Y·Z split of one relation word.

    ``proper`` is False when the maximal piece prefix and suffix overlap,
    which can only happen for presentations failing C(3); in that case
    ``middle`` is empty and prefix+middle+suffix need not rebuild the word.
    """

    word: str
    prefix: str
    middle: str
    suffix: str
    proper: bool = True

    @property
    def overlap_pattern(self):
        """X·Y — the pattern whose literal occurrence as a prefix makes a
        clean overlap prefix."""
        return self.prefix + self.middle


@dataclass(frozen=True)
class CleanOverlapMatch:
    """A clean overlap prefix of a queried word: X·Y is a prefix of the word
    and X, Y come from the factorization of ``word``."""

    prefix: str
    middle: str
    word: str
    suffix: str
    remainder: str


@dataclass(frozen=True)
class PieceTable:
    """Piece set and per-relation-word factorizations of a presentation.

    Immutable; all derived data is precomputed so queries are cheap and safe
    under concurrent reads.
    """

    presentation: Presentation
    pieces: frozenset
    max_piece_length: int
    factorizations: dict = field(repr=False)
    complement: dict = field(repr=False)
    piece_counts: dict = field(repr=False)

    def factorization(self, word):
        return self.factorizations[word]

    def complement_of(self, word):
        return self.complement[word]

    @property
    def max_pattern_length(self):
        """Longest X·Y over the relation words."""
        return max(
            (len(f.overlap_pattern) for f in self.factorizations.values()), default=0
        )

    def satisfies(self, m):
        """True when no relation word is a product of fewer than m pieces."""
        return all(c is None or c >= m for c in self.piece_counts.values())

    def require(self, m):
        """Raise NotSmallOverlapError with a witness unless C(m) holds."""
        for word, count in self.piece_counts.items():
            if count is not None and count < m:
                raise NotSmallOverlapError(m, word, piece_decomposition(word, self))


def parse_presentation(text):
    """Parse a presentation from its JSON document form.

    The document has fields ``alphabet`` (array of single-character strings,
    or a plain string of letters), ``relations`` (array of two-element word
    arrays) and optional ``mode`` ("monoid", the default, or "semigroup").
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PresentationSyntaxError(f"invalid presentation document: {exc}") from exc
    if not isinstance(doc, dict):
        raise PresentationSyntaxError("presentation document must be an object")
    try:
        alphabet = doc["alphabet"]
        relations = doc["relations"]
    except KeyError as exc:
        raise PresentationSyntaxError(f"missing field {exc}") from exc
    mode = doc.get("mode", MONOID)
    if isinstance(alphabet, str):
        alphabet = tuple(alphabet)
    else:
        alphabet = tuple(alphabet)
    try:
        relations = tuple((x, y) for x, y in relations)
    except (TypeError, ValueError) as exc:
        raise PresentationSyntaxError(
            "relations must be an array of two-element word arrays"
        ) from exc
    return Presentation(alphabet, relations, mode)


def load_presentation(path):
    with open(path, "r", encoding="utf-8") as handle:
        return parse_presentation(handle.read())


def presentation_to_dict(p):
    return {
        "alphabet": list(p.alphabet),
        "relations": [list(r) for r in p.relations],
        "mode": p.mode,
    }


def compute_pieces(presentation):
    """Compute the piece set and the X·Y·Z factorizations.

    A non-empty word is a piece exactly when it occurs as a factor of the
    relation words at two or more distinct (word, start index) locations.
    The piece set is closed under taking factors, which the downstream greedy
    decompositions rely on.
    """
    words = presentation.relation_words
    locations = defaultdict(set)
    for wi, w in enumerate(words):
        n = len(w)
        for i in range(n):
            for j in range(i + 1, n + 1):
                locations[w[i:j]].add((wi, i))
    pieces = {f for f, locs in locations.items() if len(locs) >= 2}
    pieces.add("")
    pieces = frozenset(pieces)
    max_len = max((len(p) for p in pieces), default=0)

    factorizations = {}
    for w in words:
        x = _longest_edge_piece(w, pieces, max_len, prefix=True)
        z = _longest_edge_piece(w, pieces, max_len, prefix=False)
        proper = len(x) + len(z) <= len(w)
        middle = w[len(x) : len(w) - len(z)] if proper else ""
        factorizations[w] = Factorization(w, x, middle, z, proper)

    complement = {}
    for x, y in presentation.relations:
        complement[x] = y
        complement[y] = x

    table = PieceTable(
        presentation=presentation,
        pieces=pieces,
        max_piece_length=max_len,
        factorizations=factorizations,
        complement=complement,
        piece_counts={},
    )
    for w in words:
        table.piece_counts[w] = min_piece_count(w, table)
    return table


def _longest_edge_piece(w, pieces, max_len, prefix):
    top = min(len(w), max_len)
    for length in range(top, 0, -1):
        candidate = w[:length] if prefix else w[len(w) - length :]
        if candidate in pieces:
            return candidate
    return ""


def piece_decomposition(w, table):
    """Greedy decomposition of ``w`` into non-empty pieces, longest piece
    prefix first, or None when ``w`` is not a product of pieces.

    Greediness is optimal here: the piece set is factor-closed, so whatever a
    shorter first piece leaves behind, the longest one leaves a suffix of it
    that still decomposes at least as well.
    """
    out = []
    pos = 0
    n = len(w)
    pieces = table.pieces
    max_len = table.max_piece_length
    while pos < n:
        for length in range(min(max_len, n - pos), 0, -1):
            if w[pos : pos + length] in pieces:
                out.append(w[pos : pos + length])
                pos += length
                break
        else:
            return None
    return out


def min_piece_count(w, table):
    """Minimum number of non-empty pieces multiplying to ``w``; None when
    ``w`` is not a product of pieces; 0 for the empty word."""
    decomposition = piece_decomposition(w, table)
    return None if decomposition is None else len(decomposition)


def check_small_overlap(presentation, m):
    """Decide whether the presentation satisfies C(m)."""
    if m < 1:
        raise ValueError("the small overlap degree must be at least 1")
    table = presentation if isinstance(presentation, PieceTable) else compute_pieces(presentation)
    return table.satisfies(m)


def find_clean_overlap_prefix(u, table):
    """The unique clean overlap prefix of ``u``, or None.

    Returns the match whose X·Y pattern is a prefix of ``u``.  Under C(4)
    at most one relation word can match: two matching patterns would be
    prefix-comparable and the shorter would occur at the start of two
    distinct relation words, making it a piece longer than a maximal piece
    prefix.  On out-of-contract inputs where this fails, an error is raised
    rather than picking a side.
    """
    hit = None
    for fact in table.factorizations.values():
        pattern = fact.overlap_pattern
        if fact.middle and u.startswith(pattern):
            if hit is not None and hit.word != fact.word:
                raise AmbiguousOverlapError(
                    f"both {hit.word!r} and {fact.word!r} match a prefix of {u!r}"
                )
            hit = CleanOverlapMatch(
                prefix=fact.prefix,
                middle=fact.middle,
                word=fact.word,
                suffix=fact.suffix,
                remainder=u[len(pattern) :],
            )
    return hit


def is_piece_active(piece, u, table):
    """Whether some clean overlap pattern starts strictly inside ``piece``
    when ``piece`` is glued in front of ``u``.

    Only a bounded prefix of ``u`` matters: an occurrence starting before
    position len(piece) is contained in the first len(piece)-1+|XY| letters.
    """
    if piece not in table.pieces:
        raise WordDomainError(f"{piece!r} is not a piece of the presentation")
    if not piece:
        return False
    window = piece + u[: table.max_pattern_length]
    limit = len(piece)
    for fact in table.factorizations.values():
        pattern = fact.overlap_pattern
        if fact.middle and window.find(pattern, 0, limit + len(pattern) - 1) != -1:
            return True
    return False
