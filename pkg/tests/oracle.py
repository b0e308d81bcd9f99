"""Ground truth by evaluation in A¹ and B¹, kept apart from the decision code."""

from functools import lru_cache

from limitvar.catalog import catalog
from limitvar.monoid import satisfies
from limitvar.words import Identity


@lru_cache(maxsize=None)
def equivalent(u: str, v: str) -> bool:
    ident = Identity(u, v)
    return all(satisfies(catalog(n), ident).holds for n in ("A1", "B1"))
