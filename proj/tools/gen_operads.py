#!/usr/bin/env python3
"""Generate the shipped operad definition files in operads/.

The tables are computed here from scratch, without the C++ library, so the
files double as an independent oracle for the loader and the built-in
operads.

    python3 tools/gen_operads.py [--out operads] [--max-arity 4] [--ass-max-arity 3]
"""

import argparse
import itertools
import json
from pathlib import Path


def signatures(n, max_total):
    """All (k_1..k_n) with every k_i >= 0 and sum <= max_total."""
    for ks in itertools.product(range(max_total + 1), repeat=n):
        if sum(ks) <= max_total:
            yield ks


def label(perm):
    return "[" + " ".join(str(v) for v in perm) + "]"


def permutations(n):
    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]


def after(p, q):
    """(p o q)(i) = p(q(i)), one-line 1-based tuples."""
    return tuple(p[q[i] - 1] for i in range(len(q)))


def substitute(sigma, taus):
    """Operadic composite in the associative operad.

    Read a permutation as the word w = sigma^-1(1) ... sigma^-1(n): the point
    sent to position j is w_j.  Substituting tau_i for letter i expands each
    letter into its own block, keeping block-internal order from tau_i.
    """
    sizes = [len(t) for t in taus]
    starts = [sum(sizes[:i]) for i in range(len(sizes))]
    n = len(sigma)
    word = [0] * n
    for i, s in enumerate(sigma):
        word[s - 1] = i
    image = {}
    position = 0
    for block in word:
        tau = taus[block]
        inv = [0] * len(tau)
        for j, t in enumerate(tau):
            inv[t - 1] = j
        for j in inv:
            position += 1
            image[starts[block] + j] = position
    return tuple(image[i] for i in range(sum(sizes)))


def adjacent(n, i):
    p = list(range(1, n + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def terminal(name, group, max_arity):
    records = []
    for n in range(max_arity + 1):
        for ks in signatures(n, max_arity):
            records.append({"n": n, "ks": list(ks), "args": ["*"] * (n + 1), "result": "*"})
    return {
        "name": name,
        "group": group,
        "max_arity": max_arity,
        "levels": {str(n): ["*"] for n in range(max_arity + 1)},
        "unit": "*",
        "compose": records,
    }


def associative(max_arity):
    levels = {n: permutations(n) for n in range(max_arity + 1)}
    action = {}
    for n in range(2, max_arity + 1):
        action[str(n)] = [[label(after(p, adjacent(n, i))) for p in levels[n]] for i in range(1, n)]
    records = []
    for n in range(max_arity + 1):
        for ks in signatures(n, max_arity):
            for sigma in levels[n]:
                for taus in itertools.product(*(levels[k] for k in ks)):
                    records.append(
                        {
                            "n": n,
                            "ks": list(ks),
                            "args": [label(sigma)] + [label(t) for t in taus],
                            "result": label(substitute(sigma, list(taus))),
                        }
                    )
    return {
        "name": "ass",
        "group": "symmetric",
        "max_arity": max_arity,
        "levels": {str(n): [label(p) for p in levels[n]] for n in levels},
        "action": action,
        "unit": "[1]",
        "compose": records,
    }


def dump(doc):
    """JSON with one level, generator table or composition record per line."""
    def row(v):
        return json.dumps(v, separators=(", ", ": "))

    out = ["{"]
    for key in ("name", "group", "max_arity"):
        out.append(f"  {json.dumps(key)}: {json.dumps(doc[key])},")
    for key in ("levels", "action"):
        if key in doc:
            items = [f"    {json.dumps(k)}: {row(v)}" for k, v in doc[key].items()]
            out.append(f'  "{key}": {{\n' + ",\n".join(items) + "\n  },")
    out.append(f'  "unit": {json.dumps(doc["unit"])},')
    out.append('  "compose": [\n    ' + ",\n    ".join(row(r) for r in doc["compose"]) + "\n  ]")
    out.append("}")
    return "\n".join(out) + "\n"


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "operads")
    parser.add_argument("--max-arity", type=int, default=4)
    parser.add_argument("--ass-max-arity", type=int, default=3, help="bound for ass.json (24 labels in arity 4)")
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    docs = {
        "comm.json": terminal("comm", "symmetric", args.max_arity),
        "ns_ass.json": terminal("ns-ass", "trivial", args.max_arity),
        "ass.json": associative(args.ass_max_arity),
    }
    for name, doc in docs.items():
        (args.out / name).write_text(dump(doc))


if __name__ == "__main__":
    main()
