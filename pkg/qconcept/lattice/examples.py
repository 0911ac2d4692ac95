"""Small named lattices: chains, Boolean algebras, M3 and N5."""
import itertools

from qconcept.lattice.lattice import FiniteLattice
from qconcept.util.errors import ParseError


def chain_names(n: int) -> list:
    """Default names for an n-element chain: ``0,1``, ``0,h,1``, then ``0,1/3,..``."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ParseError(f"a chain needs a positive integer size, got {n!r}")
    if n == 1:
        return ["0"]
    if n == 2:
        return ["0", "1"]
    if n == 3:
        return ["0", "h", "1"]
    return ["0"] + [f"{i}/{n - 1}" for i in range(1, n - 1)] + ["1"]


def chain(n: int | list, name: str = "") -> FiniteLattice:
    """Returns a chain with `n` elements or the given names, bottom first."""
    names = list(n) if isinstance(n, (list, tuple)) else chain_names(n)
    size = len(names)
    leq = [[i <= j for j in range(size)] for i in range(size)]
    return FiniteLattice(names, leq, name or f"C{size}")


def boolean(atoms: int | list = 2, name: str = "") -> FiniteLattice:
    """Returns the powerset of `atoms` ordered by inclusion.

    Notes:
        Subsets are named by concatenating their atoms, the empty set is ``"0"``:
        ``boolean(["a", "b"])`` has elements ``0, a, b, ab``.
    """
    if isinstance(atoms, bool) or not isinstance(atoms, (int, list, tuple)):
        raise ParseError(f"boolean atoms must be a count or a list, got {atoms!r}")
    if isinstance(atoms, int):
        if not 0 <= atoms <= 26:
            raise ParseError(f"boolean atom count {atoms} is outside 0..26")
        atoms = [chr(ord("a") + i) for i in range(atoms)]
    subsets = [
        s for k in range(len(atoms) + 1) for s in itertools.combinations(atoms, k)
    ]
    names = ["".join(s) or "0" for s in subsets]
    leq = [[set(s) <= set(t) for t in subsets] for s in subsets]
    return FiniteLattice(names, leq, name or f"B{len(atoms)}")


def diamond(name: str = "M3") -> FiniteLattice:
    """M3: bottom, three incomparable atoms ``a, b, c``, top."""
    names = ["0", "a", "b", "c", "1"]
    above = {"0": set(names), "a": {"a", "1"}, "b": {"b", "1"}, "c": {"c", "1"}}
    above["1"] = {"1"}
    return FiniteLattice(names, [[y in above[x] for y in names] for x in names], name)


def pentagon(name: str = "N5") -> FiniteLattice:
    """N5: ``0 < a < b < 1`` and ``0 < c < 1`` with ``c`` incomparable to ``a, b``."""
    names = ["0", "a", "b", "c", "1"]
    above = {
        "0": set(names),
        "a": {"a", "b", "1"},
        "b": {"b", "1"},
        "c": {"c", "1"},
        "1": {"1"},
    }
    return FiniteLattice(names, [[y in above[x] for y in names] for x in names], name)
