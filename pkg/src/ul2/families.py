"""Catalog of the parametric unicyclic families whose second-smallest
normalized Laplacian eigenvalue reaches the threshold 1 - sqrt(6)/3.

Every family is a cycle of girth 3..5 carrying small fixed "flanker"
trees at some cycle vertices and one parametric broom at another. Broom
families with a two-leaf branch count l2 stay at-or-above the threshold
for every parameter choice (equality exactly when l2 is large enough
for the root-deleted spectrum to pin lambda_2); the (l0, l1) chain
families are at-or-above only inside explicit per-l1 ranges of l0.

Two chain rows are recorded with a second, narrower range reading
(`alt_rows`): the numerically correct range is used for verdicts and the
disagreement is surfaced in notes so reports can log both readings.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Graph
from .trees import BroomSpec, RootedTree, broom_tree, broom_counts_from_tree, star_tree
from .unicyclic import UnicyclicDesc, dihedral_arrangements, realize_unicyclic, star_composition

# Flanker slot kinds.
S1 = "S1"        # bare cycle vertex
S2 = "S2"        # one pendant
STAR3 = "STAR3"  # two pendant leaves
STAR4 = "STAR4"  # three pendant leaves
BROOM = "BROOM"  # the parametric slot

_FLANKER_TREES = {
    S1: star_tree(1),
    S2: star_tree(2),
    STAR3: star_tree(3),
    STAR4: star_tree(4),
}

_FLANKER_EXTRA = {S1: 0, S2: 1, STAR3: 2, STAR4: 3}


@dataclass(frozen=True)
class Family:
    """One catalogued family.

    kind "broom3" families accept every (l0, l1, l2); kind "chain"
    families accept (l0, l1) only inside rows[l1] = (lo, hi). Equality
    holds for broom3 families iff l2 >= eq_min_l2, and for chain
    families iff l0 == eq_l0.get(l1).
    """

    tag: str
    girth: int
    layout: tuple[str, ...]
    kind: str  # "broom3" | "chain"
    rows: dict[int, tuple[int, int]] = field(default_factory=dict)
    alt_rows: dict[int, tuple[int, int]] = field(default_factory=dict)
    eq_min_l2: int | None = None
    eq_l0: dict[int, int] = field(default_factory=dict)
    aliases: dict[tuple[int, int], str] = field(default_factory=dict)

    @property
    def broom_pos(self) -> int:
        return self.layout.index(BROOM)

    @property
    def order_base(self) -> int:
        return self.girth + sum(_FLANKER_EXTRA[k] for k in self.layout if k != BROOM)

    def order(self, counts: tuple[int, ...]) -> int:
        return self.order_base + sum((i + 1) * c for i, c in enumerate(counts))

    def arity(self) -> int:
        return 3 if self.kind == "broom3" else 2

    def accept(self, counts: tuple[int, ...]) -> tuple[str | None, tuple[str, ...]]:
        """(outcome, notes): outcome "above"/"equal" when the parameters
        fall in the family's accepted region, None otherwise."""
        if len(counts) < 3:
            counts = counts + (0,) * (3 - len(counts))
        if any(c != 0 for c in counts[self.arity():]):
            return None, ()
        l0, l1, l2 = counts[0], counts[1], counts[2]
        if self.kind == "broom3":
            assert self.eq_min_l2 is not None
            outcome = "equal" if l2 >= self.eq_min_l2 else "above"
            return outcome, ()
        notes: list[str] = []
        if l1 in self.alt_rows:
            lo_a, hi_a = self.alt_rows[l1]
            lo, hi = self.rows[l1]
            in_main = lo <= l0 <= hi
            in_alt = lo_a <= l0 <= hi_a
            if in_main != in_alt:
                notes.append(
                    f"{self.tag} l1={l1}: range readings disagree "
                    f"({lo}..{hi} vs {lo_a}..{hi_a}); using {lo}..{hi} per numeric check"
                )
        if l1 not in self.rows:
            return None, tuple(notes)
        lo, hi = self.rows[l1]
        if not (lo <= l0 <= hi):
            return None, tuple(notes)
        outcome = "equal" if self.eq_l0.get(l1) == l0 else "above"
        return outcome, tuple(notes)

    def instance_name(self, counts: tuple[int, ...]) -> str:
        if self.kind == "chain" and len(counts) >= 2:
            alias = self.aliases.get((counts[0], counts[1]))
            if alias:
                return alias
        return self.tag


FAMILIES: tuple[Family, ...] = (
    # girth 5
    Family("H42", 5, (BROOM, S1, S1, S1, S1), "broom3", eq_min_l2=2),
    Family(
        "G0", 5, (S2, BROOM, S1, S1, S1), "chain",
        rows={7: (1, 1), 6: (3, 5), 5: (5, 9), 4: (7, 13),
              3: (9, 17), 2: (11, 21), 1: (13, 25), 0: (15, 29)},
    ),
    Family(
        "H1", 5, (S2, BROOM, S2, S1, S1), "chain",
        rows={1: (12, 13), 0: (14, 17)},
        aliases={(12, 1): "H4", (13, 1): "H5"},
    ),
    # girth 4
    Family(
        "H62", 4, (S2, S2, S2, BROOM), "chain",
        rows={1: (12, 12), 0: (14, 16)},
        eq_l0={1: 12, 0: 16},
        aliases={(12, 1): "H65"},
    ),
    Family(
        "E0", 4, (S2, S2, BROOM, S1), "chain",
        rows={5: (5, 5), 4: (7, 9), 3: (9, 13), 2: (11, 17), 1: (13, 21), 0: (15, 25)},
        eq_l0={5: 5, 4: 9, 3: 13, 2: 17, 1: 21, 0: 25},
    ),
    Family("H94", 4, (S2, BROOM, S2, S1), "broom3", eq_min_l2=1),
    Family(
        "F0", 4, (STAR3, BROOM, S2, S1), "chain",
        rows={5: (4, 4), 4: (6, 8), 3: (8, 12), 2: (10, 16), 1: (12, 20), 0: (14, 24)},
        eq_l0={5: 4, 4: 8, 3: 12, 2: 16, 1: 20, 0: 24},
    ),
    Family(
        "D0", 4, (STAR3, BROOM, STAR3, S1), "chain",
        rows={1: (11, 12), 0: (13, 16)},
        eq_l0={1: 12, 0: 16},
    ),
    Family("A8", 4, (S1, BROOM, S1, S2), "broom3", eq_min_l2=1),
    Family("A11", 4, (S2, BROOM, S1, S1), "broom3", eq_min_l2=2),
    Family(
        "P0", 4, (STAR3, BROOM, S1, S1), "chain",
        rows={10: (0, 0), 9: (0, 4), 8: (0, 8), 7: (1, 12), 6: (3, 16), 5: (5, 20),
              4: (7, 24), 3: (9, 28), 2: (11, 32), 1: (13, 36), 0: (15, 40)},
        alt_rows={1: (13, 26)},
        eq_l0={l1: 40 - 4 * l1 for l1 in range(11)},
    ),
    Family("A35", 4, (BROOM, S1, S1, S1), "broom3", eq_min_l2=2),
    # girth 3
    Family("B4", 3, (S2, S2, BROOM), "broom3", eq_min_l2=2),
    Family("B7", 3, (S2, STAR3, BROOM), "broom3", eq_min_l2=1),
    Family(
        "B10", 3, (S2, STAR4, BROOM), "chain",
        rows={3: (8, 9), 2: (10, 13), 1: (12, 17), 0: (14, 21)},
    ),
    Family(
        "C2", 3, (STAR3, STAR3, BROOM), "chain",
        rows={7: (0, 2), 6: (2, 6), 5: (4, 10), 4: (6, 14),
              3: (8, 18), 2: (10, 22), 1: (12, 26), 0: (14, 30)},
        alt_rows={2: (11, 22)},
    ),
    Family(
        "B33", 3, (STAR3, STAR4, BROOM), "chain",
        rows={1: (11, 11), 0: (13, 15)},
        aliases={(11, 1): "B35"},
    ),
    Family("B42", 3, (S2, BROOM, S1), "broom3", eq_min_l2=2),
    Family("B44", 3, (STAR3, BROOM, S1), "broom3", eq_min_l2=2),
    Family(
        "B45", 3, (STAR4, BROOM, S1), "chain",
        rows={8: (0, 1), 7: (1, 5), 6: (3, 9), 5: (5, 13), 4: (7, 17),
              3: (9, 21), 2: (11, 25), 1: (13, 29), 0: (15, 33)},
        alt_rows={1: (13, 19)},
    ),
    Family("B66", 3, (BROOM, S1, S1), "broom3", eq_min_l2=2),
)

FAMILY_BY_TAG = {f.tag: f for f in FAMILIES}

# Fixed members of the chain families that carry their own names.
FIXED_INSTANCES: dict[str, tuple[str, tuple[int, int]]] = {
    "H4": ("H1", (12, 1)),
    "H5": ("H1", (13, 1)),
    "H65": ("H62", (12, 1)),
    "B35": ("B33", (11, 1)),
}

# Star-composition patterns that reach the threshold: (girth, pattern,
# free-size range, equal-at). A None entry in the pattern is the free size.
@dataclass(frozen=True)
class StarItem:
    girth: int
    pattern: tuple[int | None, ...]
    free_range: tuple[int, int] | None
    equal_at: int | None = None

    def sizes_for(self, k: int | None) -> tuple[int, ...]:
        return tuple(k if s is None else s for s in self.pattern)


STAR_ITEMS: tuple[StarItem, ...] = (
    StarItem(5, (2, None, 2, 1, 1), (15, 18)),
    StarItem(4, (2, 2, 2, None), (15, 17), equal_at=17),
    StarItem(3, (3, 4, None), (14, 16)),
    StarItem(3, (4, 4, 13), None),
    StarItem(3, (7, 7, 7), None),
)


@dataclass(frozen=True)
class FamilyInstance:
    tag: str
    params: dict
    graph: Graph
    n: int
    broom_root: int | None

    def spec_string(self) -> str:
        return format_family_spec(self.tag, self.params)


def _counts_from_params(params: dict, arity: int) -> tuple[int, ...]:
    counts = tuple(int(params.get(f"l{i}", 0)) for i in range(arity))
    if any(c < 0 for c in counts):
        raise ValueError(f"broom counts must be nonnegative, got {counts}")
    extra = set(params) - {f"l{i}" for i in range(arity)}
    if extra:
        raise ValueError(f"unexpected parameters {sorted(extra)}")
    return counts


def make_family(tag: str, params: dict | None = None) -> FamilyInstance:
    """Realize a catalog family, a fixed member, or a star composition."""
    params = dict(params or {})
    if tag in FIXED_INSTANCES:
        base_tag, (l0, l1) = FIXED_INSTANCES[tag]
        if params:
            raise ValueError(f"{tag} takes no parameters")
        inst = make_family(base_tag, {"l0": l0, "l1": l1})
        return FamilyInstance(tag, inst.params, inst.graph, inst.n, inst.broom_root)
    if tag == "S":
        g = int(params.pop("g"))
        sizes = tuple(int(s) for s in params.pop("sizes"))
        if params:
            raise ValueError(f"unexpected parameters {sorted(params)}")
        graph = star_composition(g, sizes)
        return FamilyInstance("S", {"g": g, "sizes": sizes}, graph, sum(sizes), None)
    fam = FAMILY_BY_TAG.get(tag)
    if fam is None:
        raise ValueError(f"unknown family tag {tag!r}")
    counts = _counts_from_params(params, fam.arity())
    trees = tuple(
        broom_tree(BroomSpec(counts)) if kind == BROOM else _FLANKER_TREES[kind]
        for kind in fam.layout
    )
    graph = realize_unicyclic(UnicyclicDesc(trees))
    out_params = {f"l{i}": c for i, c in enumerate(counts)}
    return FamilyInstance(tag, out_params, graph, fam.order(counts), fam.broom_pos)


def probe_instance(tag: str, counts: tuple[int, ...]) -> FamilyInstance:
    """Instance of a catalog layout with an arbitrary-length broom.

    Used by verification probes that step outside a family's parameter
    schema (for example a branch with three leaves); make_family would
    reject such counts.
    """
    fam = FAMILY_BY_TAG.get(tag)
    if fam is None:
        raise ValueError(f"unknown family tag {tag!r}")
    trees = tuple(
        broom_tree(BroomSpec(counts)) if kind == BROOM else _FLANKER_TREES[kind]
        for kind in fam.layout
    )
    graph = realize_unicyclic(UnicyclicDesc(trees))
    params = {f"l{i}": c for i, c in enumerate(counts)}
    return FamilyInstance(tag, params, graph, fam.order(counts), fam.broom_pos)


def family_order(tag: str, params: dict | None = None) -> int:
    """Closed-form order without realizing the graph."""
    params = dict(params or {})
    if tag in FIXED_INSTANCES:
        base_tag, (l0, l1) = FIXED_INSTANCES[tag]
        return family_order(base_tag, {"l0": l0, "l1": l1})
    if tag == "S":
        return sum(int(s) for s in params["sizes"])
    fam = FAMILY_BY_TAG.get(tag)
    if fam is None:
        raise ValueError(f"unknown family tag {tag!r}")
    return fam.order(_counts_from_params(params, fam.arity()))


def sweep_family(tag: str, n_min: int, n_max: int):
    """All parameter tuples of a catalog family with order in [n_min, n_max],
    in lexicographic (l0, l1[, l2]) order. No range filtering is applied:
    the sweep covers the structural domain and the classifier decides."""
    if n_min > n_max:
        raise ValueError(f"empty order range [{n_min}, {n_max}]")
    fam = FAMILY_BY_TAG.get(tag)
    if fam is None:
        raise ValueError(f"unknown family tag {tag!r}")
    arity = fam.arity()
    base = fam.order_base
    tuples = []
    for total in range(max(0, n_min - base), n_max - base + 1):
        tuples.extend(_broom_tuples(total, arity))
    tuples.sort()
    for counts in tuples:
        yield {f"l{i}": c for i, c in enumerate(counts)}


def _broom_tuples(total: int, arity: int) -> list[tuple[int, ...]]:
    """(l0..l_{arity-1}) with sum (i+1) l_i == total."""
    out = []
    if arity == 2:
        for l1 in range(total // 2 + 1):
            out.append((total - 2 * l1, l1))
    else:
        for l2 in range(total // 3 + 1):
            rest = total - 3 * l2
            for l1 in range(rest // 2 + 1):
                out.append((rest - 2 * l1, l1, l2))
    return out


# ---------------------------------------------------------------------------
# Structural matching
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilyMatch:
    tag: str            # catalog tag, or "S" for a star item
    params: dict
    outcome: str | None  # "above"/"equal" when accepted, None when rejected
    notes: tuple[str, ...] = ()


def _tree_is(tree: RootedTree, kind: str) -> bool:
    return tree.encoding == _FLANKER_TREES[kind].encoding


def match_arrangement(fam: Family, trees: tuple[RootedTree, ...]) -> FamilyMatch | None:
    if len(trees) != fam.girth:
        return None
    counts: tuple[int, ...] | None = None
    for kind, tree in zip(fam.layout, trees):
        if kind == BROOM:
            counts = broom_counts_from_tree(tree)
            if counts is None:
                return None
        elif not _tree_is(tree, kind):
            return None
    assert counts is not None
    outcome, notes = fam.accept(counts)
    arity = fam.arity()
    width = max(arity, len(counts))
    shown = tuple(counts[i] if i < len(counts) else 0 for i in range(width))
    params = {f"l{i}": c for i, c in enumerate(shown)}
    tag = fam.instance_name(shown[:2]) if outcome else fam.tag
    return FamilyMatch(tag, params, outcome, notes)


def match_star(trees: tuple[RootedTree, ...]) -> list[FamilyMatch]:
    """Match a star composition against the star items of its girth."""
    if any(t.depth > 1 for t in trees):
        return []
    g = len(trees)
    out = []
    for arr in dihedral_arrangements(trees):
        sizes = tuple(t.order for t in arr)
        for item in STAR_ITEMS:
            if item.girth != g:
                continue
            if item.free_range is None:
                if sizes == item.pattern:
                    out.append(FamilyMatch("S", {"g": g, "sizes": sizes}, "above"))
                continue
            k = None
            ok = True
            for s, p in zip(sizes, item.pattern):
                if p is None:
                    k = s
                elif s != p:
                    ok = False
                    break
            if not ok or k is None:
                continue
            lo, hi = item.free_range
            if lo <= k <= hi:
                outcome = "equal" if item.equal_at == k else "above"
                out.append(FamilyMatch("S", {"g": g, "sizes": sizes}, outcome))
    return out


def match_desc(desc: UnicyclicDesc) -> list[FamilyMatch]:
    """Every way the description matches a catalog family or star item,
    over all rotations/reflections of the cycle. Duplicates collapse."""
    matches: dict[tuple, FamilyMatch] = {}

    def add(m: FamilyMatch | None) -> None:
        if m is None:
            return
        key = (m.tag, tuple(sorted((k, str(v)) for k, v in m.params.items())), m.outcome)
        matches.setdefault(key, m)

    for arr in dihedral_arrangements(desc.trees):
        for fam in FAMILIES:
            add(match_arrangement(fam, arr))
    for m in match_star(desc.trees):
        add(m)
    ordered = sorted(
        matches.values(),
        key=lambda m: (
            {"equal": 0, "above": 1, None: 2}[m.outcome],
            0 if m.tag == "S" else 1,  # report star compositions as stars
            m.tag,
            sorted(m.params.items(), key=lambda kv: (kv[0], str(kv[1]))),
        ),
    )
    return ordered


# ---------------------------------------------------------------------------
# Spec strings ("H42:l0=16,l1=0,l2=0", "S:g=4,sizes=2,2,2,17", "C:n=11")
# ---------------------------------------------------------------------------

def parse_family_spec(spec: str) -> tuple[str, dict]:
    """Split "TAG:key=val,..." into tag and parameters. A sizes list is
    written "sizes=2,2,2,17": the first value carries the key, the bare
    integers after it extend the list."""
    spec = spec.strip()
    if not spec:
        raise ValueError("empty family spec")
    tag, _, rest = spec.partition(":")
    tag = tag.strip()
    params: dict = {}
    sizes: list[int] | None = None
    for part in rest.split(",") if rest else []:
        part = part.strip()
        if not part:
            continue
        key, eq, val = part.partition("=")
        try:
            if eq:
                if key.strip() == "sizes":
                    sizes = [int(val)]
                else:
                    params[key.strip()] = int(val)
            elif sizes is not None:
                sizes.append(int(part))
            else:
                raise ValueError
        except ValueError:
            raise ValueError(f"cannot parse {part!r} in family spec {spec!r}") from None
    if sizes is not None:
        params["sizes"] = tuple(sizes)
    return tag, params


def instance_from_spec(spec: str) -> FamilyInstance:
    """Realize any spec string, including the cycle conveniences
    "C:n=11" (plain cycle) and "C1:n=10" (cycle plus one pendant)."""
    from .graphs import cycle_graph
    from .unicyclic import cycle_with_pendant

    tag, params = parse_family_spec(spec)
    if tag == "C":
        n = int(params["n"])
        return FamilyInstance("C", {"n": n}, cycle_graph(n), n, None)
    if tag == "C1":
        n = int(params["n"])
        return FamilyInstance("C1", {"n": n}, cycle_with_pendant(n), n + 1, None)
    return make_family(tag, params)


def format_family_spec(tag: str, params: dict) -> str:
    if not params:
        return tag
    if tag == "S":
        sizes = ",".join(str(s) for s in params["sizes"])
        return f"S:g={params['g']},sizes={sizes}"
    body = ",".join(f"{k}={params[k]}" for k in sorted(params))
    return f"{tag}:{body}"
