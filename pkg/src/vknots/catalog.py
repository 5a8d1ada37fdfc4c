"""Named diagram catalogs.

The built-in catalog ships the fixtures the golden tests pin down (the
virtual trefoil, virtual Hopf link, knot 4.31 with its crossings numbered
as alpha..delta, the Kishino knot, the VK family, and friends).  User
catalogs use the same one-entry-per-line format::

    name <TAB> gauss-code [<TAB> comma,separated,tags]

with '#' starting a comment line.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .diagram import Diagram, parse
from .errors import GaussCodeError

__all__ = ["CatalogEntry", "load_catalog", "builtin_catalog", "lookup"]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    code: str
    tags: tuple[str, ...] = ()

    def diagram(self) -> Diagram:
        return parse(self.code)


def parse_catalog(text: str, source: str = "<catalog>") -> list[CatalogEntry]:
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) < 2:
            raise GaussCodeError(f"{source}:{lineno}: expected name<TAB>code")
        name, code = parts[0].strip(), parts[1].strip()
        tags = tuple(t.strip() for t in parts[2].split(",")) if len(parts) > 2 else ()
        parse(code)  # validate eagerly so bad catalogs fail loudly
        entries.append(CatalogEntry(name, code, tags))
    return entries


def load_catalog(path: str) -> list[CatalogEntry]:
    with open(path, encoding="utf-8") as fh:
        return parse_catalog(fh.read(), source=path)


@lru_cache(maxsize=1)
def builtin_catalog() -> dict[str, CatalogEntry]:
    text = resources.files("vknots.data").joinpath("catalog.tsv").read_text("utf-8")
    return {e.name: e for e in parse_catalog(text, source="builtin catalog")}


def lookup(name: str) -> CatalogEntry | None:
    return builtin_catalog().get(name)
