"""Named fixtures shipped as text files under ``modgray/data``.

The files are hand-transcribed, never generated, so that computed tables can
be checked against them independently.
"""

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from . import formats

KINDS = ("generator_matrix", "map_table", "expected_matrix")


class UnknownFixture(KeyError):
    pass


@dataclass(frozen=True, eq=False)
class NamedFixture:
    name: str
    kind: str
    payload: object  # formats.MatrixFile or formats.TableFile
    text: str

    @property
    def spec(self):
        return self.payload.spec

    @property
    def provenance(self):
        return self.payload.meta.get("provenance", "")

    @property
    def meta(self):
        return self.payload.meta

    @property
    def matrix(self):
        return self.payload.matrix

    @property
    def table(self):
        return self.payload.table


def _data_dir():
    return resources.files("modgray") / "data"


@lru_cache(maxsize=None)
def list_fixtures():
    return tuple(sorted(p.name[:-4] for p in _data_dir().iterdir() if p.name.endswith(".txt")))


@lru_cache(maxsize=None)
def get_fixture(name):
    if name not in list_fixtures():
        raise UnknownFixture(f"unknown fixture {name!r}; known: {', '.join(list_fixtures())}")
    text = (_data_dir() / f"{name}.txt").read_text(encoding="utf-8")
    payload = formats.loads(text)
    kind = payload.meta.get("kind")
    if kind not in KINDS:
        raise formats.FormatError(f"fixture {name}: bad kind {kind!r}")
    if payload.meta.get("name") != name:
        raise formats.FormatError(f"fixture {name}: name metadata does not match file")
    if not payload.meta.get("provenance"):
        raise formats.FormatError(f"fixture {name}: empty provenance")
    return NamedFixture(name, kind, payload, text)


def fixtures_from(source):
    """Expected-matrix fixtures whose ``source`` is the given fixture."""
    out = []
    for name in list_fixtures():
        fx = get_fixture(name)
        if fx.kind == "expected_matrix" and fx.meta.get("source") == source:
            out.append(fx)
    return out
