"""Catalog of small groups, stored as permutation generators.

File format (UTF-8, ``#`` starts a comment)::

    group <order> <name>
    gen <img0> <img1> ... <img(d-1)>
    end
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import CatalogError, CatalogIncomplete
from .groups import FiniteGroup, Permutation, closure

# Number of isomorphism classes of groups of each order.
KNOWN_GROUP_COUNTS = {
    1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2,
    11: 1, 12: 5, 13: 1, 14: 2, 15: 1, 16: 14, 17: 1, 18: 5, 19: 1, 20: 5,
    21: 2, 22: 2, 23: 1, 24: 15, 25: 2, 26: 2, 27: 5,
}

MAX_CATALOG_ORDER = 27

# Catalog names whose conventional structure description is shared with another
# group. Both groups of order 20 with a normal Z5 and quotient Z4 are written
# Z5:Z4 in the usual notation; the catalog keeps them apart.
STRUCTURE_DESCRIPTIONS = {
    "Dic5": "Z5:Z4",
}


def structure_description(name: str) -> str:
    """Conventional structure description of a catalog group name."""
    return STRUCTURE_DESCRIPTIONS.get(name, name)


@dataclass(frozen=True)
class CatalogEntry:
    order: int
    name: str
    generators: tuple[Permutation, ...]


@dataclass
class GroupCatalog:
    entries: list[CatalogEntry]
    _groups: dict[str, FiniteGroup] = field(default_factory=dict, repr=False)

    @classmethod
    def parse(cls, text: str, source: str = "<catalog>") -> GroupCatalog:
        entries: list[CatalogEntry] = []
        current: tuple[int, str] | None = None
        gens: list[Permutation] = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            where = f"{source}:{lineno}"
            if tokens[0] == "group":
                if current is not None:
                    raise CatalogError(f"{where}: 'group' before 'end'")
                if len(tokens) != 3:
                    raise CatalogError(f"{where}: expected 'group <order> <name>'")
                try:
                    order = int(tokens[1])
                except ValueError:
                    raise CatalogError(f"{where}: bad order {tokens[1]!r}") from None
                current = (order, tokens[2])
                gens = []
            elif tokens[0] == "gen":
                if current is None:
                    raise CatalogError(f"{where}: 'gen' outside a group record")
                try:
                    gens.append(tuple(int(t) for t in tokens[1:]))
                except ValueError:
                    raise CatalogError(f"{where}: non-integer image") from None
            elif tokens[0] == "end":
                if current is None or not gens:
                    raise CatalogError(f"{where}: 'end' without a group and generators")
                entries.append(CatalogEntry(current[0], current[1], tuple(gens)))
                current = None
            else:
                raise CatalogError(f"{where}: unknown keyword {tokens[0]!r}")
        if current is not None:
            raise CatalogError(f"{source}: unterminated record for {current[1]}")
        names = [e.name for e in entries]
        if len(set(names)) != len(names):
            raise CatalogError(f"{source}: duplicate group names")
        return cls(entries)

    @classmethod
    def load(cls, path: str | Path | None = None) -> GroupCatalog:
        if path is None:
            text = resources.files("ddcg").joinpath("data/groups.txt").read_text(encoding="utf-8")
            return cls.parse(text, "groups.txt")
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise CatalogError(f"cannot read catalog {path}: {exc}") from None
        return cls.parse(text, str(path))

    def group(self, name: str) -> FiniteGroup:
        if name not in self._groups:
            entry = next((e for e in self.entries if e.name == name), None)
            if entry is None:
                raise KeyError(name)
            try:
                self._groups[name] = closure(entry.generators, entry.order, entry.name)
            except ValueError as exc:
                raise CatalogError(f"bad catalog entry {name}: {exc}") from exc
        return self._groups[name]

    def names(self, order: int | None = None) -> list[str]:
        return [e.name for e in self.entries if order is None or e.order == order]

    def groups_of_order(self, order: int, require_complete: bool = True) -> list[FiniteGroup]:
        groups = [self.group(n) for n in self.names(order)]
        if require_complete and order in KNOWN_GROUP_COUNTS and len(groups) != KNOWN_GROUP_COUNTS[order]:
            raise CatalogIncomplete(order, len(groups), KNOWN_GROUP_COUNTS[order])
        if require_complete and order not in KNOWN_GROUP_COUNTS:
            raise CatalogIncomplete(order)
        return groups

    def __len__(self) -> int:
        return len(self.entries)


_default: GroupCatalog | None = None


def default_catalog() -> GroupCatalog:
    global _default
    if _default is None:
        _default = GroupCatalog.load()
    return _default
