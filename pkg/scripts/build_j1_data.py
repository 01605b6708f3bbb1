"""Regenerate src/irratio/data/j1_266.json.

J1 is built from Janko's two 7x7 matrices over GF(11).  A subgroup
PSL(2,11) of index 266 is located as <x, y> with x of order 11 and y an
involution, and the action on its left cosets gives the permutations.
"""
import json
import pathlib
import time

import numpy as np

from irratio.field import make_field
from irratio.group import MatrixGroup
from irratio.products import left_cosets

Y = [[1 if j == (i + 1) % 7 else 0 for j in range(7)] for i in range(7)]
Z = [
    [-3, 2, -1, -1, -3, -1, -3],
    [-2, 1, 1, 3, 1, 3, 3],
    [-1, -1, -3, -1, -3, -3, 2],
    [-1, -3, -1, -3, -3, 2, -1],
    [-3, -1, -3, -3, 2, -1, -1],
    [1, 3, 3, -2, 1, 1, 3],
    [3, 3, -2, 1, 1, 3, 1],
]
OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "irratio" / "data" / "j1_266.json"


def bounded_closure(G, gens, cap):
    seen = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > cap:
                        return None
        frontier = nxt
    return seen


def main():
    t0 = time.time()
    G = MatrixGroup(make_field(11), 7, [Y, Z], spec="j1_matrix")
    assert G.order == 175560, G.order
    orders = G.orders()
    x = G.elements[int(np.nonzero(orders == 11)[0][0])]
    for j in np.nonzero(orders == 2)[0]:
        H = bounded_closure(G, [x, G.elements[int(j)]], 660)
        if H is not None and len(H) == 660:
            break
    else:
        raise SystemExit("no PSL(2,11) found")
    sub = G.subgroup([x, G.elements[int(j)]])
    labels = left_cosets(G, sub)
    npts = int(labels.max()) + 1
    first = np.full(npts, G.order)
    np.minimum.at(first, labels, np.arange(G.order))
    left = G._enum_left()
    perms = [[int(v) for v in labels[left[t][first]]] for t in range(2)]
    OUT.write_text(json.dumps({"degree": npts, "generators": perms}))
    print(f"degree {npts}, wrote {OUT} in {time.time() - t0:.1f}s")


if __name__ == "__main__":
    main()
