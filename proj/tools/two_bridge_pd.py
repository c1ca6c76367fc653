#!/usr/bin/env python3
"""Emit PD codes for alternating 4-plat (two-bridge) diagrams.

Every knot with at most seven crossings is two-bridge, so the census table in
tests/data is produced from Conway notation with this script:

    python3 tools/two_bridge_pd.py > tests/data/knots_le7.tsv

The diagram is the plat closure of sigma_2^{a1} sigma_1^{-a2} sigma_2^{a3} ...
on four strands.  Crossing ends are listed counterclockwise starting at the
incoming understrand.
"""

import sys

TABLE = [
    ("3_1", [3]), ("4_1", [2, 2]), ("5_1", [5]), ("5_2", [3, 2]),
    ("6_1", [4, 2]), ("6_2", [3, 1, 2]), ("6_3", [2, 1, 1, 2]),
    ("7_1", [7]), ("7_2", [5, 2]), ("7_3", [4, 3]), ("7_4", [3, 1, 3]),
    ("7_5", [3, 2, 2]), ("7_6", [2, 2, 1, 2]), ("7_7", [2, 1, 1, 1, 2]),
]

LINKS = [("L2a1", [2]), ("L4a1", [4])]

# counterclockwise order of the four ends of a crossing drawn with y pointing up
CCW = ["NE", "NW", "SW", "SE"]
THROUGH = {"NW": "SE", "SE": "NW", "NE": "SW", "SW": "NE"}


def plat_word(conway):
    terms = list(conway)
    if len(terms) % 2 == 0:
        terms[-1] -= 1
        terms.append(1)
    word = []
    for i, a in enumerate(terms):
        gen, sign = (2, +1) if i % 2 == 0 else (1, -1)
        word += [(gen, sign)] * a
    return word


def pd_code(conway):
    word = plat_word(conway)
    link = {}  # undirected segment connections between ports/tokens

    def connect(a, b):
        link.setdefault(a, []).append(b)
        link.setdefault(b, []).append(a)

    current = {x: ("T", x) for x in range(1, 5)}
    for k, (i, _) in enumerate(word):
        connect(current[i], (k, "NW"))
        connect(current[i + 1], (k, "NE"))
        current[i], current[i + 1] = (k, "SW"), (k, "SE")
    for x in range(1, 5):
        connect(current[x], ("B", x))
    caps = {("T", 1): ("T", 2), ("T", 2): ("T", 1), ("T", 3): ("T", 4), ("T", 4): ("T", 3),
            ("B", 1): ("B", 2), ("B", 2): ("B", 1), ("B", 3): ("B", 4), ("B", 4): ("B", 3)}

    def far_port(port):
        node = link[port][0]
        while node[0] in ("T", "B"):
            node = [n for n in link[caps[node]]][0]
        return node

    n = len(word)
    labels = {}
    incoming = set()
    label = 0
    for start_k in range(n):
        start = (start_k, "NW")
        if start in labels:
            continue
        for first in ("NW", "NE"):
            port = (start_k, first)
            if port in labels:
                continue
            # traverse the component leaving through `port`
            p = port
            while True:
                if p in labels:
                    break
                label += 1
                q = far_port(p)
                labels[p] = label
                labels[q] = label
                incoming.add(q)
                p = (q[0], THROUGH[q[1]])
    crossings = []
    for k, (i, sign) in enumerate(word):
        over = ("NW", "SE") if sign > 0 else ("NE", "SW")
        under = [e for e in CCW if e not in over]
        start = next(e for e in under if (k, e) in incoming)
        j = CCW.index(start)
        crossings.append([labels[(k, CCW[(j + t) % 4])] for t in range(4)])
    return " ".join("X[%s]" % ",".join(map(str, c)) for c in crossings)


def main():
    out = sys.stdout
    out.write("# alternating two-bridge diagrams, generated by tools/two_bridge_pd.py\n")
    rows = TABLE + (LINKS if "--links" in sys.argv else [])
    for name, conway in rows:
        out.write("%s\t%s\n" % (name, pd_code(conway)))


if __name__ == "__main__":
    main()
