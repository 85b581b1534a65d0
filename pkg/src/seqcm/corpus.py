"""Built-in example ideals and complexes used by the tests and by verify.

Each entry is small enough to cross-check every route in seconds, and the
collection covers the interesting boundary cases: monomial and general
homogeneous ideals, pure and nonpure complexes, Cohen-Macaulay ones,
sequentially Cohen-Macaulay ones that are not Cohen-Macaulay, and ones
that are neither.
"""

import json
import os
import sys

from .groebner import PolynomialIdeal
from .simplicial import SimplicialComplex

# name -> (n, generator strings, note)
IDEALS = {
    "A1": (2, ["x1^2", "x2^2"], "complete intersection of two squares"),
    "A2": (2, ["x1*x2"], "two crossing lines"),
    "A3": (2, ["x1^2", "x1*x2 + x2^2"], "non-monomial, finite colength"),
    "A4": (3, ["x1*x2*x3"], "hollow triangle face ideal"),
    "A5": (3, ["x1*x2", "x1*x3"], "plane plus line"),
    "A6": (3, ["x1^2 + x2*x3", "x2^2"], "non-monomial complete intersection"),
    "A7": (3, ["x1*x2 + x3^2", "x1*x3", "x2^3"], "non-monomial, mixed degrees"),
    "A8": (4, ["x1*x3", "x1*x4", "x2*x3", "x2*x4"],
           "face ideal of two disjoint edges"),
    "A9": (4, ["x1*x2*x3", "x2*x3*x4"], "two cubes sharing a square"),
    "A10": (4, ["x1^2 - x2*x3", "x3^2 - x1*x4"], "non-monomial binomials"),
    "A11": (2, ["x1^3 + x2^3"], "principal cubic"),
    "A12": (3, ["x1 + x2 + x3"], "hyperplane"),
}

# name -> (n, facets, note)
COMPLEXES = {
    "C1": (2, [[1], [2]], "two disjoint points"),
    "C2": (3, [[1, 2, 3]], "full simplex"),
    "C3": (2, [[]], "irrelevant complex"),
    "C4": (3, [[1, 2], [1, 3], [2, 3]], "hollow triangle"),
    "C5": (3, [[2, 3], [1]], "edge plus isolated vertex"),
    "C6": (4, [[1, 2], [3, 4]], "two disjoint edges"),
    "C7": (4, [[1, 2], [2, 3], [3, 4]], "path on four vertices"),
    "C8": (4, [[1, 2], [2, 3], [3, 4], [1, 4]], "four-cycle"),
    "C9": (4, [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]],
           "boundary of the tetrahedron"),
    "C10": (4, [[1, 2, 3], [1, 2, 4]], "two triangles glued along an edge"),
    "C11": (4, [[1, 2, 3], [4]], "triangle plus isolated vertex"),
    "C12": (5, [[1, 2, 3], [1, 4, 5]], "two triangles glued at a vertex"),
    "C13": (5, [[1, 2], [2, 3], [3, 4], [4, 5], [1, 5]], "five-cycle"),
    "C14": (5, [[1, 2, 5], [2, 3, 5], [3, 4, 5], [1, 4, 5]],
            "cone over the four-cycle"),
    "C15": (6, [[a, b, c] for a in (1, 2) for b in (3, 4) for c in (5, 6)],
            "boundary of the octahedron"),
    "C16": (5, [[1, 2, 3], [4, 5]], "triangle plus a disjoint edge"),
    "C17": (4, [[1, 2, 3], [3, 4]], "triangle with a pendant edge"),
}


def corpus_ideal(name):
    n, gens, _ = IDEALS[name]
    return PolynomialIdeal.from_strings(n, gens)


def corpus_complex(name):
    n, facets, _ = COMPLEXES[name]
    return SimplicialComplex(n, facets)


def write_corpus(directory):
    """Write every corpus entry as a JSON file under the given directory."""
    os.makedirs(directory, exist_ok=True)
    written = []
    for name in sorted(IDEALS):
        n, gens, note = IDEALS[name]
        path = os.path.join(directory, name + ".json")
        with open(path, "w") as fh:
            json.dump({"name": name, "note": note, "n": n,
                       "generators": gens}, fh, indent=1, sort_keys=True)
            fh.write("\n")
        written.append(path)
    for name in sorted(COMPLEXES):
        n, facets, note = COMPLEXES[name]
        path = os.path.join(directory, name + ".json")
        with open(path, "w") as fh:
            json.dump({"name": name, "note": note, "n": n,
                       "facets": facets}, fh, indent=1, sort_keys=True)
            fh.write("\n")
        written.append(path)
    return written


if __name__ == "__main__":
    target = sys.argv[1] if len(sys.argv) > 1 else "corpus"
    for p in write_corpus(target):
        print(p)
