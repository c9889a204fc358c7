"""Independent end-to-end computation for tests/data/tiny (rewarding off).

Prints the values frozen into experiment_test.cc. Written from the stated
rules directly: regex tokenization, tf * ln(N/df), cosine, sort by
(-score, id), AP over prefixes, pooled interpolated precision.
"""
import math
import pathlib
import re

import numpy as np

STOP = set("""i me my myself we our ours ourselves you your yours yourself
yourselves he him his himself she her hers herself it its itself they them
their theirs themselves what which who whom this that these those am is are
was were be been being have has had having do does did doing a an the and but
if or because as until while of at by for with about against between into
through during before after above below to from up down in out on off over
under again further then once here there when where why how all any both each
few more most other some such no nor not only own same so than too very s t
can will just don should now d ll m o re ve y ain aren couldn didn doesn hadn
hasn haven isn ma mightn mustn needn shan shouldn wasn weren won wouldn""".split())

root = pathlib.Path(__file__).resolve().parents[1] / "data" / "tiny"


def tokens(text):
    out = []
    for tok in re.split(r"[^A-Za-z0-9\x80-￿]+", text):
        tok = tok.lower()
        if len(tok) >= 2 and tok not in STOP:
            out.append(tok)
    return out


def read(d):
    return {p.stem: p.read_text() for p in sorted((root / d).glob("*.txt"))}


src, tgt = read("sources"), read("targets")
docs = {**src, **tgt}
ids = list(src) + list(tgt)
toks = {i: tokens(docs[i]) for i in ids}
vocab = sorted({t for i in ids for t in toks[i]})
N = len(ids)
df = {t: sum(t in toks[i] for i in ids) for t in vocab}
vec = {i: np.array([toks[i].count(t) * math.log(N / df[t]) for t in vocab]) for i in ids}


def cos(u, v):
    nu, nv = np.dot(u, u), np.dot(v, v)
    if nu == 0 or nv == 0:
        return 0.0
    return float(np.dot(u, v) / math.sqrt(nu * nv))


gold = set()
for line in (root / "answers.tsv").read_text().splitlines():
    if line and not line.startswith("#"):
        s, t = line.split("\t")
        gold.add((s, t))

lists = {}
for s in src:
    scored = [(t, cos(vec[s], vec[t])) for t in tgt]
    scored.sort(key=lambda e: (-e[1], e[0]))
    lists[s] = scored

aps = []
for s, lst in lists.items():
    g = {t for (a, t) in gold if a == s}
    if not g:
        continue
    total = 0.0
    for r in range(1, len(lst) + 1):
        if lst[r - 1][0] in g:
            prefix = [e[0] for e in lst[:r]]
            total += sum(1 for x in prefix if x in g) / r
    aps.append(total / len(g))
    print(f"AP[{s}] = {total / len(g)!r}  ranking = {lst}")
print("MAP =", repr(sum(aps) / len(aps)))

retrieved = {(s, t) for s, lst in lists.items() for t, _ in lst}
correct = len(retrieved & gold)
p, r = correct / len(retrieved), correct / len(gold)
print("precision =", repr(p), "recall =", repr(r))
print("f1 =", repr(2 * p * r / (p + r)), "f2 =", repr(5 * p * r / (4 * p + r)))

pooled = sorted(((sc, s, t) for s, lst in lists.items() for t, sc in lst),
                key=lambda e: (-e[0], e[1], e[2]))
curve = []
for level in range(1, 11):
    best = 0.0
    for k in range(1, len(pooled) + 1):
        hits = sum((s, t) in gold for _, s, t in pooled[:k])
        if hits / len(gold) >= level / 10 - 1e-12:
            best = max(best, hits / k)
    curve.append(best)
print("pr_curve =", curve)
