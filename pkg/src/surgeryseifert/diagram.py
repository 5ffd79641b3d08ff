"""Oriented link diagrams with explicitly signed crossings.

A diagram is a set of oriented components, each an ordered cycle of edge
ids, plus crossing records. Edge ``e`` ends at the crossing where it is an
``*_in`` slot and starts at the crossing where it is an ``*_out`` slot.
Planarity is never checked; only traversal consistency and signs are.

Crossing sign convention: a crossing is +1 when turning the under-strand
direction a quarter turn counterclockwise gives the over-strand direction.

Rewrites (push-offs, band slides) keep existing edge ids where possible.
When a new crossing is inserted into an edge, the edge keeps its id for
the sub-arc before the new crossing and the remaining sub-arcs get fresh
ids larger than any id already in use.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import count
from typing import Iterable, Literal, Sequence

from .errors import DiagramError

Role = Literal["surgery", "knot"]
L2R = "L2R"
R2L = "R2L"


@dataclass(frozen=True, order=True)
class Crossing:
    over_in: int
    over_out: int
    under_in: int
    under_out: int
    sign: int

    def to_dict(self) -> dict:
        return {
            "over_in": self.over_in,
            "over_out": self.over_out,
            "under_in": self.under_in,
            "under_out": self.under_out,
            "sign": self.sign,
        }


@dataclass(frozen=True)
class Component:
    name: str
    role: Role
    edges: tuple[int, ...]
    framing: int | None = None

    def to_dict(self) -> dict:
        out = {"name": self.name, "role": self.role}
        if self.role == "surgery":
            out["framing"] = self.framing
        out["edges"] = list(self.edges)
        return out


@dataclass(frozen=True)
class Diagram:
    """A validated diagram. Construction validates and canonically orders."""

    components: tuple[Component, ...] = ()
    crossings: tuple[Crossing, ...] = ()
    _edge_owner: dict = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        comps = tuple(sorted(self.components, key=lambda c: c.name))
        xs = tuple(sorted(self.crossings, key=lambda x: (x.over_in, x.under_in)))
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "crossings", xs)
        object.__setattr__(self, "_edge_owner", _validate(comps, xs))

    def component(self, name: str) -> Component:
        for c in self.components:
            if c.name == name:
                return c
        raise DiagramError(f"unknown component {name!r}")

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.components)

    def owner(self, edge: int) -> str:
        return self._edge_owner[edge]

    def edges(self) -> set[int]:
        return set(self._edge_owner)

    def to_dict(self) -> dict:
        return {
            "components": [c.to_dict() for c in self.components],
            "crossings": [x.to_dict() for x in self.crossings],
        }

    @classmethod
    def from_dict(cls, data) -> Diagram:
        if not isinstance(data, dict):
            raise DiagramError("diagram must be a JSON object")
        unknown = set(data) - {"components", "crossings"}
        if unknown:
            raise DiagramError(f"unexpected top-level keys: {sorted(unknown)}")
        comps = []
        for k, rec in enumerate(data.get("components", [])):
            comps.append(_component_from_dict(rec, k))
        xs = []
        for k, rec in enumerate(data.get("crossings", [])):
            xs.append(_crossing_from_dict(rec, k))
        return cls(tuple(comps), tuple(xs))


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _component_from_dict(rec, k) -> Component:
    where = f"component record {k}"
    if not isinstance(rec, dict):
        raise DiagramError(f"{where}: expected an object")
    name = rec.get("name")
    if not isinstance(name, str) or not name:
        raise DiagramError(f"{where}: missing or empty name")
    where = f"component {name!r}"
    unknown = set(rec) - {"name", "role", "framing", "edges"}
    if unknown:
        raise DiagramError(f"{where}: unexpected keys {sorted(unknown)}")
    role = rec.get("role")
    if role not in ("surgery", "knot"):
        raise DiagramError(f"{where}: role must be 'surgery' or 'knot', got {role!r}")
    framing = rec.get("framing")
    if role == "surgery" and not _is_int(framing):
        raise DiagramError(f"{where}: surgery component needs an integer framing")
    if role == "knot" and framing is not None:
        raise DiagramError(f"{where}: knot components carry no framing")
    edges = rec.get("edges")
    if not isinstance(edges, list) or not all(_is_int(e) for e in edges):
        raise DiagramError(f"{where}: edges must be a list of integers")
    return Component(name, role, tuple(edges), framing)


def _crossing_from_dict(rec, k) -> Crossing:
    where = f"crossing record {k}"
    keys = ("over_in", "over_out", "under_in", "under_out", "sign")
    if not isinstance(rec, dict) or set(rec) != set(keys):
        raise DiagramError(f"{where}: expected exactly the keys {list(keys)}")
    if not all(_is_int(rec[key]) for key in keys):
        raise DiagramError(f"{where}: all fields must be integers")
    if rec["sign"] not in (1, -1):
        raise DiagramError(f"{where}: sign must be 1 or -1")
    return Crossing(*(rec[key] for key in keys))


def _validate(comps: Sequence[Component], xs: Sequence[Crossing]) -> dict:
    owner: dict[int, str] = {}
    seen_names = set()
    for c in comps:
        if c.name in seen_names:
            raise DiagramError(f"duplicate component name {c.name!r}")
        seen_names.add(c.name)
        if c.role == "surgery" and not _is_int(c.framing):
            raise DiagramError(f"component {c.name!r}: framing missing on surgery component")
        if c.role == "knot" and c.framing is not None:
            raise DiagramError(f"component {c.name!r}: knot components carry no framing")
        if not c.edges:
            raise DiagramError(f"component {c.name!r}: empty edge cycle")
        for e in c.edges:
            if e <= 0:
                raise DiagramError(f"component {c.name!r}: edge ids must be positive, got {e}")
            if e in owner:
                raise DiagramError(f"edge {e} listed by both {owner[e]!r} and {c.name!r}")
            owner[e] = c.name

    uses: dict[int, int] = {}
    for x in xs:
        for e in (x.over_in, x.over_out, x.under_in, x.under_out):
            if e not in owner:
                raise DiagramError(f"edge {e} (crossing {_fmt(x)}) belongs to no component")
            uses[e] = uses.get(e, 0) + 1
    for e, n in sorted(uses.items()):
        if n != 2:
            raise DiagramError(f"edge {e} appears {n} times in crossing records (expected 2)")

    ins: dict[int, tuple[int, str]] = {}
    outs: set[int] = set()
    for k, x in enumerate(xs):
        for strand, e_in, e_out in (("over", x.over_in, x.over_out), ("under", x.under_in, x.under_out)):
            if e_in in ins:
                raise DiagramError(f"edge {e_in} is an in-slot at two crossings")
            if e_out in outs:
                raise DiagramError(f"edge {e_out} is an out-slot at two crossings")
            ins[e_in] = (k, strand)
            outs.add(e_out)

    for c in comps:
        used = [e for e in c.edges if e in uses]
        if not used:
            if len(c.edges) != 1:
                raise DiagramError(
                    f"component {c.name!r}: a crossing-free component must have exactly one edge"
                )
            continue
        if len(used) != len(c.edges):
            e = next(e for e in c.edges if e not in uses)
            raise DiagramError(f"edge {e} of {c.name!r} appears 0 times in crossing records")
        for j, e in enumerate(c.edges):
            nxt = c.edges[(j + 1) % len(c.edges)]
            k, strand = ins[e]
            x = xs[k]
            expected = x.over_out if strand == "over" else x.under_out
            if expected != nxt:
                raise DiagramError(
                    f"traversal inconsistency in {c.name!r}: edge {e} enters crossing "
                    f"{_fmt(x)} on the {strand} strand, which leaves on edge {expected}, "
                    f"but the component continues with edge {nxt}"
                )

    mutual: dict[tuple[str, str], int] = {}
    for x in xs:
        a, b = owner[x.over_in], owner[x.under_in]
        if a != b:
            key = tuple(sorted((a, b)))
            mutual[key] = mutual.get(key, 0) + x.sign
    for (a, b), total in sorted(mutual.items()):
        if total % 2:
            raise DiagramError(
                f"crossings between {a!r} and {b!r} have odd sign sum {total}; "
                "linking number would not be an integer"
            )
    return owner


def _fmt(x: Crossing) -> str:
    return f"({x.over_in},{x.over_out},{x.under_in},{x.under_out};{x.sign:+d})"


def parse_diagram(text: str | bytes) -> Diagram:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramError(f"malformed JSON: {exc}") from None
    return Diagram.from_dict(data)


def serialize_diagram(d: Diagram) -> str:
    return json.dumps(d.to_dict(), indent=2) + "\n"


def load_diagram(path) -> Diagram:
    with open(path, encoding="utf-8") as fh:
        return parse_diagram(fh.read())


def diagram(components: Iterable[dict] = (), crossings: Iterable[Sequence[int] | dict] = ()) -> Diagram:
    """Convenience constructor; crossings may be 5-tuples in slot order."""
    xs = []
    for x in crossings:
        xs.append(x if isinstance(x, dict) else dict(zip(
            ("over_in", "over_out", "under_in", "under_out", "sign"), x)))
    return Diagram.from_dict({"components": list(components), "crossings": xs})


def writhe(d: Diagram, c: str) -> int:
    d.component(c)
    return sum(x.sign for x in d.crossings if d.owner(x.over_in) == c == d.owner(x.under_in))


def linking_number_s3(d: Diagram, a: str, b: str) -> int:
    """Half the signed count of crossings between components a and b."""
    d.component(a)
    d.component(b)
    if a == b:
        raise DiagramError("linking number needs two distinct components; use writhe")
    total = 0
    for x in d.crossings:
        if {d.owner(x.over_in), d.owner(x.under_in)} == {a, b}:
            total += x.sign
    return total // 2


def linking_table(d: Diagram, names: Sequence[str] | None = None) -> dict[tuple[str, str], int]:
    """Pairwise S^3 linking numbers keyed by sorted name pairs."""
    names = sorted(names if names is not None else d.names)
    return {
        (a, b): linking_number_s3(d, a, b)
        for i, a in enumerate(names)
        for b in names[i + 1:]
    }


# -- token form -------------------------------------------------------------
#
# Each component is a cyclic token list alternating arc labels and passages:
# [arc, passage, arc, passage, ...]; a crossing-free loop is [arc]. An arc
# label is an existing edge id or None (fresh id assigned on output). A
# passage is (crossing_key, is_over).


class _Work:
    def __init__(self, d: Diagram):
        self.meta = {c.name: (c.role, c.framing) for c in d.components}
        self.signs: dict[int, int] = {}
        self.tokens: dict[str, list] = {}
        self._keys = count()
        key_of: dict[int, int] = {}
        for x in d.crossings:
            key_of[x.over_in] = key_of[x.under_in] = k = next(self._keys)
            self.signs[k] = x.sign
        by_in: dict[int, bool] = {}
        for x in d.crossings:
            by_in[x.over_in] = True
            by_in[x.under_in] = False
        for c in d.components:
            toks: list = []
            for e in c.edges:
                toks.append(e)
                if e in key_of:
                    toks.append((key_of[e], by_in[e]))
            self.tokens[c.name] = toks
        self.max_id = max(d.edges(), default=0)

    def new_crossing(self, sign: int) -> int:
        k = next(self._keys)
        self.signs[k] = sign
        return k

    def arc_position(self, comp: str, edge: int) -> int:
        toks = self.tokens[comp]
        for i in range(0, len(toks), 2):
            if toks[i] == edge:
                return i
        raise DiagramError(f"edge {edge} is not an edge of {comp!r}")

    def insert_on_arc(self, comp: str, pos: int, passages: Sequence[tuple[int, bool]]):
        """Insert passages (in order) along the arc at token position ``pos``."""
        if not passages:
            return
        toks = self.tokens[comp]
        closed_loop = len(toks) == 1
        new = [toks[pos]]
        for p in passages:
            new += [p, None]
        if closed_loop:
            new.pop()
        toks[pos:pos + 1] = new

    def passages(self, comp: str) -> list[tuple[int, bool]]:
        return self.tokens[comp][1::2]

    def owners(self) -> dict[int, list[str]]:
        out: dict[int, list[str]] = {}
        for name, toks in self.tokens.items():
            for k, _ in toks[1::2]:
                out.setdefault(k, []).append(name)
        return out

    def build(self) -> Diagram:
        fresh = count(self.max_id + 1)
        labelled = {}
        for name in sorted(self.tokens):
            toks = self.tokens[name]
            labelled[name] = [
                (t if t is not None else next(fresh)) if i % 2 == 0 else t
                for i, t in enumerate(toks)
            ]
        comps = []
        slots: dict[int, dict[str, int]] = {}
        for name, toks in labelled.items():
            role, framing = self.meta[name]
            comps.append(Component(name, role, tuple(toks[0::2]), framing))
            n = len(toks)
            for i in range(1, n, 2):
                k, is_over = toks[i]
                strand = "over" if is_over else "under"
                rec = slots.setdefault(k, {})
                rec[f"{strand}_in"] = toks[i - 1]
                rec[f"{strand}_out"] = toks[(i + 1) % n]
        xs = [
            Crossing(r["over_in"], r["over_out"], r["under_in"], r["under_out"], self.signs[k])
            for k, r in slots.items()
        ]
        return Diagram(tuple(comps), tuple(xs))


def _fresh_name(d_names: Iterable[str], base: str) -> str:
    taken = set(d_names)
    name = base + "'"
    while name in taken:
        name += "'"
    return name


def _push_off_work(w: _Work, c: str, orient: int) -> tuple[str, list[int]]:
    """Add a framed push-off of surgery component ``c`` to ``w``.

    Returns the copy's name and, for each passage index j of ``c`` in its
    input form, the token position on the copy of the arc that runs
    parallel to the arc ending at that passage (index 0 also serves a
    crossing-free component).
    """
    role, p = w.meta[c]
    if role != "surgery":
        raise DiagramError(f"push-off needs a surgery component; {c!r} is a {role}")
    copy = _fresh_name(w.tokens, c)
    orig = list(w.passages(c))
    owners = w.owners()
    wr = sum(w.signs[k] for k, _ in orig if owners[k] == [c, c]) // 2

    # Blocks of copy passages, one per passage of c, plus extra passages
    # that c and other components pick up right after their own passage.
    copy_blocks: list[list[tuple[int, bool]]] = []
    after: dict[tuple[str, int], list[tuple[int, bool]]] = {}
    self_pair: dict[int, tuple[int, int, int]] = {}
    for j, (k, is_over) in enumerate(orig):
        s = w.signs[k]
        if owners[k] == [c, c]:
            if k not in self_pair:
                # original O/U plus O/U', O'/U, O'/U'
                self_pair[k] = (w.new_crossing(s), w.new_crossing(s), w.new_crossing(s))
            y_ou2, y_o2u, y_o2u2 = self_pair[k]
            if is_over:
                after[(c, j)] = [(y_ou2, True)]
                copy_blocks.append([(y_o2u, True), (y_o2u2, True)])
            else:
                after[(c, j)] = [(y_o2u, False)]
                copy_blocks.append([(y_ou2, False), (y_o2u2, False)])
        else:
            (other,) = [n for n in owners[k] if n != c]
            y = w.new_crossing(s)
            copy_blocks.append([(y, is_over)])
            # position of the partner passage on the other component
            pos = w.passages(other).index((k, not is_over))
            after.setdefault((other, pos), []).append((y, not is_over))

    twist_c: list[tuple[int, bool]] = []
    twist_copy: list[tuple[int, bool]] = []
    delta = p - wr
    t = 1 if delta > 0 else -1
    for _ in range(abs(delta)):
        z1, z2 = w.new_crossing(t), w.new_crossing(t)
        twist_c += [(z1, True), (z2, False)]
        twist_copy += [(z1, False), (z2, True)]

    # Rebuild every component. Passages inserted into an arc follow its
    # existing label, so the label stays on the first sub-arc.
    for name in list(w.tokens):
        toks = w.tokens[name]
        npass = len(toks) // 2
        inserts: dict[int, list] = {}
        for j in range(npass):
            if (name, j) in after:
                inserts.setdefault((j + 1) % npass, []).extend(after[(name, j)])
        if name == c and twist_c:
            inserts.setdefault(0, []).extend(twist_c)
        if not inserts:
            continue
        new: list = []
        for j in range(max(npass, 1)):
            new.append(toks[2 * j])
            for q in inserts.get(j, []):
                new += [q, None]
            if npass:
                new.append(toks[2 * j + 1])
        if npass == 0:
            new.pop()
        w.tokens[name] = new

    copy_tokens: list = []
    arc_pos: list[int] = []
    if not copy_blocks:
        copy_blocks = [[]]
    for j, block in enumerate(copy_blocks):
        if j == 0:
            block = twist_copy + block
        arc_pos.append(len(copy_tokens))
        for q in block:
            copy_tokens += [None, q]
    if not copy_tokens:
        copy_tokens = [None]

    if orient == -1:
        keys = {k for k, _ in copy_tokens[1::2]}
        on_copy_twice = {k for k in keys if sum(1 for kk, _ in copy_tokens[1::2] if kk == k) == 2}
        for k in keys - on_copy_twice:
            w.signs[k] = -w.signs[k]
        passages = copy_tokens[1::2]
        n = len(passages)
        if n:
            rev = list(reversed(passages))
            copy_tokens = []
            for q in rev:
                copy_tokens += [None, q]
            # arc before passage q in the original order lies between
            # passages q-1 and q, i.e. before reversed index n-q.
            arc_pos = [2 * ((n - pos // 2) % n) for pos in arc_pos]
    elif orient != 1:
        raise DiagramError(f"orient must be +1 or -1, got {orient}")

    w.tokens[copy] = copy_tokens
    w.meta[copy] = ("knot", None)
    return copy, arc_pos


def push_off(d: Diagram, c: str, orient: int = 1) -> tuple[Diagram, str]:
    """Add a framed parallel copy of surgery component ``c``.

    The copy is a blackboard parallel, corrected by full twists with ``c``
    so that ``lk(c, copy) == orient * framing(c)``. With ``orient == -1`` the
    copy runs against ``c``. The copy is returned as a knot component.
    """
    comp = d.component(c)
    if comp.role != "surgery":
        raise DiagramError(f"push-off needs a surgery component; {c!r} is a knot")
    w = _Work(d)
    copy, _ = _push_off_work(w, c, orient)
    return w.build(), copy


@dataclass(frozen=True)
class BandSpec:
    """Where a slide band attaches and which edges it passes over.

    ``knot_edge`` is an edge of the sliding knot; ``surgery_edge`` an edge
    of the surgery component whose push-off receives the band (the band
    lands on the copy of that edge). ``path`` lists ``(edge, direction)``
    pairs: the band crosses over each edge in turn, and ``direction`` says
    whether that edge runs left-to-right (``"L2R"``) or right-to-left
    (``"R2L"``) as seen looking along the band from the knot. ``None``
    endpoints mean the lowest edge id of the respective component.
    """

    knot_edge: int | None = None
    surgery_edge: int | None = None
    path: tuple[tuple[int, str], ...] = ()

    def __post_init__(self):
        path = tuple((int(e), str(dr)) for e, dr in self.path)
        for e, dr in path:
            if dr not in (L2R, R2L):
                raise DiagramError(f"band direction for edge {e} must be L2R or R2L, got {dr!r}")
        object.__setattr__(self, "path", path)

    def to_dict(self) -> dict:
        return {
            "knot_edge": self.knot_edge,
            "surgery_edge": self.surgery_edge,
            "path": [{"edge": e, "dir": dr} for e, dr in self.path],
        }

    @classmethod
    def from_dict(cls, data) -> BandSpec:
        if data is None:
            return cls()
        if not isinstance(data, dict):
            raise DiagramError("band spec must be an object")
        try:
            path = tuple((p["edge"], p["dir"]) for p in data.get("path", []))
        except (KeyError, TypeError):
            raise DiagramError("band path entries need 'edge' and 'dir'") from None
        return cls(data.get("knot_edge"), data.get("surgery_edge"), path)


def band_slide(d: Diagram, k: str, c: str, orient: int = 1, band: BandSpec | None = None) -> Diagram:
    """Band-sum knot ``k`` with a push-off of surgery component ``c``.

    ``orient=+1`` is a positive slide (copy parallel to ``c``), ``-1`` a
    negative one. Both band strands pass over every edge named in the band
    path; being antiparallel, their signs over any edge cancel. The merged
    component keeps the name ``k``.
    """
    band = band or BandSpec()
    kc, cc = d.component(k), d.component(c)
    if kc.role != "knot":
        raise DiagramError(f"{k!r} is not a knot component")
    if cc.role != "surgery":
        raise DiagramError(f"{c!r} is not a surgery component")
    if orient not in (1, -1):
        raise DiagramError(f"orient must be +1 or -1, got {orient}")
    k_edge = band.knot_edge if band.knot_edge is not None else min(kc.edges)
    c_edge = band.surgery_edge if band.surgery_edge is not None else min(cc.edges)
    if k_edge not in kc.edges:
        raise DiagramError(f"band endpoint edge {k_edge} is not on knot {k!r}")
    if c_edge not in cc.edges:
        raise DiagramError(f"band endpoint edge {c_edge} is not on surgery component {c!r}")
    all_edges = d.edges()
    for e, _ in band.path:
        if e not in all_edges:
            raise DiagramError(
                f"band path edge {e} is not an edge of the input diagram "
                "(a band cannot pass over itself or the push-off)"
            )

    w = _Work(d)
    copy, arc_pos = _push_off_work(w, c, orient)
    copy_pos = arc_pos[cc.edges.index(c_edge)] if len(arc_pos) > 1 else arc_pos[0]

    # The outgoing strand (knot -> copy) runs on the left of the band, so an
    # L2R path edge meets it first.
    out_strand: list[tuple[int, bool]] = []
    back_strand: list[tuple[int, bool]] = []
    for e, dr in band.path:
        s = 1 if dr == L2R else -1
        x_out, x_back = w.new_crossing(s), w.new_crossing(-s)
        out_strand.append((x_out, True))
        back_strand.append((x_back, True))
        pair = [(x_out, False), (x_back, False)]
        if dr == R2L:
            pair.reverse()
        owner = d.owner(e)
        w.insert_on_arc(owner, w.arc_position(owner, e), pair)
    back_strand.reverse()

    ctoks = w.tokens.pop(copy)
    del w.meta[copy]
    rotated = ctoks[copy_pos:] + ctoks[:copy_pos]
    passages = out_strand + rotated[1::2] + back_strand
    if not passages:
        return w.build()

    # k up to the cut, out along the band, once round the copy from its cut,
    # back along the band, then the rest of k.
    ktoks = w.tokens[k]
    kpos = w.arc_position(k, k_edge)
    merged = [ktoks[kpos]]
    for q in passages:
        merged += [q, None]
    if len(ktoks) == 1:
        merged.pop()
    else:
        merged += ktoks[kpos + 1:] + ktoks[:kpos]
    w.tokens[k] = merged
    return w.build()
