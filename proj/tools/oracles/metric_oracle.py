# Copyright 2026 The Stampsy Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Brute-force BLEU-1/2 and ROUGE-L over randomized sentence pairs.

Tokens are single non-whitespace characters. Writes the pairs with their
scores as JSON; the C++ tests compare against the frozen output.
"""

import functools
import json
import math
import random
import sys

ALPHABET = "我你他很好累想去学校家今天雨ab c"


def tokens(text):
    return [ch for ch in text if not ch.isspace()]


def grams(toks, n):
    return [tuple(toks[i:i + n]) for i in range(len(toks) - n + 1)]


def clipped(cand, refs, n):
    cg = grams(cand, n)
    matched = 0
    for g in set(cg):
        in_cand = sum(1 for x in cg if x == g)
        in_ref = max(sum(1 for x in grams(r, n) if x == g) for r in refs)
        matched += min(in_cand, in_ref)
    return matched, len(cg)


def closest_ref_len(cand, refs):
    c = len(cand)
    return sorted((abs(len(r) - c), len(r)) for r in refs)[0][1]


def bleu_from(matches, totals, c, r, n):
    if c == 0:
        return 0.0
    logs = []
    for i in range(n):
        if totals[i] == 0:
            continue
        if matches[i] == 0:
            return 0.0
        logs.append(math.log(matches[i] / totals[i]))
    if not logs:
        return 0.0
    bp = 1.0 if c > r else math.exp(1 - r / c)
    return bp * math.exp(sum(logs) / len(logs))


def sentence_bleu(cand, refs, n):
    m, t = zip(*(clipped(cand, refs, k) for k in range(1, n + 1)))
    return bleu_from(m, t, len(cand), closest_ref_len(cand, refs), n)


def corpus_bleu(pairs, n):
    m, t, c, r = [0] * n, [0] * n, 0, 0
    for cand, refs in pairs:
        for k in range(1, n + 1):
            a, b = clipped(cand, refs, k)
            m[k - 1] += a
            t[k - 1] += b
        c += len(cand)
        r += closest_ref_len(cand, refs)
    return bleu_from(m, t, c, r, n)


def lcs(a, b):
    @functools.lru_cache(maxsize=None)
    def go(i, j):
        if i == len(a) or j == len(b):
            return 0
        if a[i] == b[j]:
            return 1 + go(i + 1, j + 1)
        return max(go(i + 1, j), go(i, j + 1))
    return go(0, 0)


def rouge_l(cand, ref):
    if not cand or not ref:
        return 0.0
    l = lcs(tuple(cand), tuple(ref))
    if l == 0:
        return 0.0
    p, r = l / len(cand), l / len(ref)
    return 2 * p * r / (p + r)


def random_text(rng):
    n = rng.randint(1, 24)
    return "".join(rng.choice(ALPHABET) for _ in range(n)).strip() or "好"


def main():
    rng = random.Random(4242)
    pairs = []
    for _ in range(50):
        cand = random_text(rng)
        refs = [random_text(rng) for _ in range(rng.randint(1, 3))]
        pairs.append((cand, refs))
    out = {"pairs": [], "corpus": {}}
    toks = [(tokens(c), [tokens(r) for r in rs]) for c, rs in pairs]
    for (c, rs), (ct, rts) in zip(pairs, toks):
        out["pairs"].append({
            "candidate": c,
            "references": rs,
            "bleu1": sentence_bleu(ct, rts, 1),
            "bleu2": sentence_bleu(ct, rts, 2),
            "rouge_l": rouge_l(ct, rts[0]),
        })
    out["corpus"] = {"bleu1": corpus_bleu(toks, 1), "bleu2": corpus_bleu(toks, 2)}
    json.dump(out, open(sys.argv[1], "w", encoding="utf-8") if len(sys.argv) > 1 else sys.stdout,
              ensure_ascii=False, indent=1)


if __name__ == "__main__":
    main()
