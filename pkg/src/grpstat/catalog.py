"""Named catalog of shipped action instances.

Each entry couples a CLI-addressable id with a zero-argument builder
and a set of filter tags.  Builders are deterministic and the test
suite re-derives every entry's claimed order, so a broken builder
cannot ship silently.

Tags in use:
  large_base   natural, k-subset, and product-of-natural actions
  type:HA type:PA type:SD type:AS
               affine / product / diagonal / almost-simple structure
  slow         entries whose statistics belong to the minutes tier
  family tags  natural subsets partitions affine product diagonal
               subspace pairs quadform sporadic
"""

import re
from dataclasses import dataclass, field

from .actions import (
    DiagonalSpec,
    act_affine,
    act_diagonal,
    act_k_subsets,
    act_m24,
    act_natural,
    act_partitions,
    act_product,
    act_quadratic_forms,
    act_subspace_pairs,
    act_subspaces,
    alt_transposition_auto,
    psl32_graph_auto,
)


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    """id, zero-argument builder, filter tags, documented stat values."""

    id: str
    builder: object
    tags: frozenset
    expected: dict = field(default_factory=dict)

    def build(self):
        return self.builder()


def _diag_alt5():
    T = act_natural(5, "alt").group()
    return act_diagonal(DiagonalSpec(T, 2, (alt_transposition_auto(T),)))


def _diag_psl32():
    T, graph = psl32_graph_auto()
    return act_diagonal(DiagonalSpec(T, 2, (graph,)))


_ENTRIES = []


def _add(eid, builder, *tags, expected=None):
    _ENTRIES.append(CatalogEntry(eid, builder, frozenset(tags), expected or {}))


for _n in range(2, 9):
    _as = ("type:AS",) if _n >= 5 else ()
    _add("sym%d" % _n, lambda n=_n: act_natural(n, "sym"),
         "natural", "large_base", *_as)
for _n in range(3, 9):
    _as = ("type:AS",) if _n >= 5 else ()
    _add("alt%d" % _n, lambda n=_n: act_natural(n, "alt"),
         "natural", "large_base", *_as)

for _n, _k, _v in ((5, 2, "sym"), (6, 2, "sym"), (6, 3, "sym"), (7, 2, "alt")):
    _suffix = "" if _v == "sym" else "-" + _v
    _add("subs-%d-%d%s" % (_n, _k, _suffix),
         lambda n=_n, k=_k, v=_v: act_k_subsets(n, k, v),
         "subsets", "large_base", "type:AS")

# a blocks of size b; (2,2) is the unfaithful Klein-kernel case, so it
# carries no structure tag.
_add("part-2-2", lambda: act_partitions(2, 2), "partitions")
for _a, _b in ((2, 3), (3, 2), (4, 2)):
    _add("part-%d-%d" % (_a, _b), lambda a=_a, b=_b: act_partitions(a, b),
         "partitions", "type:AS")

for _d, _p in ((1, 5), (1, 7), (2, 3), (3, 2)):
    _add("aff-%d-%d" % (_d, _p), lambda d=_d, p=_p: act_affine(d, p),
         "affine", "type:HA")

for _n in (3, 4, 5):
    _add("prod-sym%d-2" % _n, lambda n=_n: act_product(act_natural(n), 2),
         "product", "large_base", "type:PA")

_add("diag-a5-2", _diag_alt5, "diagonal", "type:SD", expected={"I": 5})
_add("diag-psl32-2", _diag_psl32, "diagonal", "type:SD")

for _n, _q, _h in ((3, 2, 3), (4, 2, 4), (3, 3, 4), (3, 4, 4)):
    _add("sub-%d-%d-1" % (_n, _q), lambda n=_n, q=_q: act_subspaces(n, q, 1),
         "subspace", "type:AS", expected={"H": _h})
_add("sub-3-2-2", lambda: act_subspaces(3, 2, 2), "subspace", "type:AS")
_add("sub-4-2-2", lambda: act_subspaces(4, 2, 2), "subspace", "type:AS")
_add("psl-2-4", lambda: act_subspaces(2, 4, 1, "sl"), "subspace", "type:AS")
_add("gammal-2-4", lambda: act_subspaces(2, 4, 1, "gammal"),
     "subspace", "type:AS")

_add("pairs-3-2-1-comp", lambda: act_subspace_pairs(3, 2, 1), "pairs")
_add("pairs-3-2-1-flag", lambda: act_subspace_pairs(3, 2, 1, "flag"), "pairs")
_add("pairs-3-2-1-flag-graph",
     lambda: act_subspace_pairs(3, 2, 1, "flag", graph_aut=True), "pairs")

_add("quad-1-1-plus", lambda: act_quadratic_forms(1, 1, "plus"), "quadform")
_add("quad-1-1-minus", lambda: act_quadratic_forms(1, 1, "minus"), "quadform")
for _m, _e in ((2, 1), (1, 2)):
    for _s in ("plus", "minus"):
        _add("quad-%d-%d-%s" % (_m, _e, _s),
             lambda m=_m, e=_e, s=_s: act_quadratic_forms(m, e, s),
             "quadform", "type:AS")
_add("quad-1-2-plus-gamma",
     lambda: act_quadratic_forms(1, 2, "plus", "gammasp"),
     "quadform", "type:AS")
for _s in ("plus", "minus"):
    _add("quad-2-2-%s" % _s, lambda s=_s: act_quadratic_forms(2, 2, s),
         "quadform", "type:AS", "slow")

# I = 7 is forced: 5-transitivity pins the first five stabilizer indices at
# 24*23*22*21*20, and the order-48 five-point stabilizer admits strict chains
# of length at most 2 (checked by exhaustive element enumeration).
_add("m24", act_m24, "sporadic", "type:AS", "slow", expected={"b": 7, "H": 7, "I": 7})

_BY_ID = {e.id: e for e in _ENTRIES}
_KNOWN_TAGS = frozenset().union(*(e.tags for e in _ENTRIES))


def entry_ids():
    return [e.id for e in _ENTRIES]


def get(eid):
    try:
        return _BY_ID[eid]
    except KeyError:
        raise CatalogError("unknown catalog id %r (ids: %s)"
                           % (eid, ", ".join(entry_ids()))) from None


def catalog(tag_filter=None):
    """Entries carrying every tag in the filter, in registry order.

    The filter is a string of comma/whitespace-separated tags or any
    iterable of tags; an empty filter returns the whole catalog.
    Unknown tags raise rather than silently matching nothing.
    """
    if not tag_filter:
        return list(_ENTRIES)
    if isinstance(tag_filter, str):
        tokens = [t for t in re.split(r"[\s,]+", tag_filter.strip()) if t]
    else:
        tokens = list(tag_filter)
    for tok in tokens:
        if tok not in _KNOWN_TAGS:
            raise CatalogError("unknown tag %r (tags: %s)"
                               % (tok, ", ".join(sorted(_KNOWN_TAGS))))
    return [e for e in _ENTRIES if e.tags.issuperset(tokens)]


def build(eid, validate=False):
    inst = get(eid).build()
    if validate:
        inst.validate()
    return inst
