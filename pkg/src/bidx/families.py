"""Named graphs with a dominating vertex: stars, S+, B1-B2, G1-G5, H1-H11.

Every family member is vertex 0 joined to all other vertices, plus a small
"remainder" graph with k edges placed on vertices 1, 2, ...; the remaining
vertices become pendent.  k = 0..4 gives trees through tetracyclic graphs.

Labels pinned by closed-form values: B1 = P3, B2 = 2K2, G1 = 3K2,
G2 = P3+K2, G3 = P4, G4 = K_{1,3}, G5 = K3, H4 = K_{1,4}, H5 = paw,
H8 = C4.  The other H labels have no recoverable identity; they are
assigned to the remaining 4-edge remainders in ascending order of the
remainder's canonical graph6 form (see ``test_families``).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, build_graph

# remainder edges on local vertices 0..r-1 (shifted to 1..r when built)
REMAINDERS: dict[str, tuple[tuple[int, int], ...]] = {
    "S": (),
    "S_PLUS": ((0, 1),),
    "B1": ((0, 1), (1, 2)),
    "B2": ((0, 1), (2, 3)),
    "G1": ((0, 1), (2, 3), (4, 5)),
    "G2": ((0, 1), (1, 2), (3, 4)),
    "G3": ((0, 1), (1, 2), (2, 3)),
    "G4": ((0, 1), (0, 2), (0, 3)),
    "G5": ((0, 1), (1, 2), (0, 2)),
    "H1": ((0, 1), (0, 2), (0, 3), (3, 4)),  # fork
    "H2": ((0, 1), (1, 2), (2, 3), (3, 4)),  # P5
    "H3": ((0, 1), (1, 2), (0, 2), (3, 4)),  # K3 + K2
    "H4": ((0, 1), (0, 2), (0, 3), (0, 4)),  # K_{1,4}
    "H5": ((0, 1), (1, 2), (0, 2), (0, 3)),  # paw
    "H6": ((0, 1), (0, 2), (0, 3), (4, 5)),  # K_{1,3} + K2
    "H7": ((0, 1), (1, 2), (3, 4), (4, 5)),  # 2P3
    "H8": ((0, 1), (1, 2), (2, 3), (3, 0)),  # C4
    "H9": ((0, 1), (1, 2), (2, 3), (4, 5)),  # P4 + K2
    "H10": ((0, 1), (1, 2), (3, 4), (5, 6)),  # P3 + 2K2
    "H11": ((0, 1), (2, 3), (4, 5), (6, 7)),  # 4K2
}

TAGS = tuple(REMAINDERS)

# Labels whose remainder is fixed by the index formulas they must satisfy.
PINNED_TAGS = frozenset({"S", "S_PLUS", "B1", "B2", "G1", "G2", "G3", "G4", "G5", "H4", "H5", "H8"})


def remainder_size(tag: str) -> int:
    """Non-isolated vertex count of the tag's remainder graph."""
    es = REMAINDERS[tag]
    return max((max(e) for e in es), default=-1) + 1


def remainder_edges(tag: str) -> int:
    return len(REMAINDERS[tag])


def min_n(tag: str) -> int:
    if tag == "S":
        return 2
    return remainder_size(tag) + 1


def tags_with_k(k: int) -> list[str]:
    return [t for t in TAGS if remainder_edges(t) == k]


@dataclass(frozen=True)
class FamilyId:
    tag: str
    n: int

    def __post_init__(self):
        if self.tag not in REMAINDERS:
            raise ValueError(f"unknown family tag {self.tag!r}; expected one of {', '.join(TAGS)}")

    @property
    def admissible(self) -> bool:
        return self.n >= min_n(self.tag)


def make_family(fid: FamilyId | str, n: int | None = None) -> Graph:
    """Build a family member: ``make_family(FamilyId("B1", 6))`` or ``make_family("B1", 6)``."""
    if not isinstance(fid, FamilyId):
        fid = FamilyId(fid, n)
    if not fid.admissible:
        raise GraphError(f"{fid.tag} needs n >= {min_n(fid.tag)}, got n={fid.n}")
    star = [(0, i) for i in range(1, fid.n)]
    rest = [(u + 1, v + 1) for u, v in REMAINDERS[fid.tag]]
    return build_graph(fid.n, star + rest)


def admissible_families(n: int, k: int | None = None) -> list[FamilyId]:
    tags = TAGS if k is None else tags_with_k(k)
    return [FamilyId(t, n) for t in tags if n >= min_n(t)]
