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

"""Reference corpus statistics, written separately from the C++ code.

Usage: corpus_stats_oracle.py corpus.jsonl > stats.json
"""

import json
import sys

SKILLS = ["immediacy", "interpretations", "self_disclosures", "open_questions",
          "feeling_reflection", "restatements", "information_giving", "direct_guidance",
          "challenge", "others"]
SUBTYPES = ["place", "relaxation", "lifestyle", "therapy", "music"]
TYPES = ["diagnosis", "qa", "knowledge_grounded", "recommendation", "empathetic"]
TYPE_OF = {
    "immediacy": "diagnosis", "open_questions": "diagnosis", "interpretations": "qa",
    "information_giving": "knowledge_grounded", "direct_guidance": "recommendation",
    "feeling_reflection": "empathetic", "restatements": "empathetic",
    "self_disclosures": "empathetic",
}
CJK = [(0x4E00, 0x9FFF), (0x3400, 0x4DBF), (0x20000, 0x2A6DF), (0xF900, 0xFAFF),
       (0x3000, 0x303F), (0x3040, 0x30FF), (0xAC00, 0xD7AF), (0xFF00, 0xFFEF)]
SPACE = set(" \t\n\r\f\v 　") | {chr(c) for c in range(0x2000, 0x200C)}


def mixed_tokens(text):
    tokens, run = [], ""
    for ch in text:
        if ch in SPACE:
            if run:
                tokens.append(run)
            run = ""
        elif any(lo <= ord(ch) <= hi for lo, hi in CJK):
            if run:
                tokens.append(run)
            run = ""
            tokens.append(ch)
        else:
            run += ch
    if run:
        tokens.append(run)
    return len(tokens)


def mean(total, n):
    return None if n == 0 else total / n


def main():
    sessions = [json.loads(line) for line in open(sys.argv[1], encoding="utf-8") if line.strip()]
    per = {k: [0, 0] for k in SKILLS + ["sub:" + s for s in SUBTYPES] + ["type:" + t for t in TYPES]}
    n_client = n_counselor = tok_client = tok_counselor = labeled = unlabeled = alternation = 0
    goals_per, skills_per, types_per = [], [], []
    for s in sessions:
        goals, skills, types = 0, set(), set()
        last = None
        warned = False
        for t in s["turns"]:
            if t["speaker"] == last:
                warned = True
            last = t["speaker"]
            n = mixed_tokens(t["text"])
            if t["speaker"] == "client":
                n_client += 1
                tok_client += n
            else:
                n_counselor += 1
                tok_counselor += n
            g = t.get("goal")
            if g is None:
                unlabeled += 1
                continue
            goals += 1
            if "skill" not in g:
                continue
            labeled += 1
            sk = g["skill"]
            skills.add(sk)
            per[sk][0] += 1
            per[sk][1] += n
            if g.get("subtype"):
                per["sub:" + g["subtype"]][0] += 1
                per["sub:" + g["subtype"]][1] += n
            if sk in TYPE_OF:
                types.add(TYPE_OF[sk])
                per["type:" + TYPE_OF[sk]][0] += 1
                per["type:" + TYPE_OF[sk]][1] += n
        alternation += warned
        goals_per.append(goals)
        skills_per.append(len(skills))
        types_per.append(len(types))

    def block(keys, prefix):
        return {k: {"count": per[prefix + k][0], "mean_length": mean(per[prefix + k][1], per[prefix + k][0])}
                for k in keys}

    d = len(sessions)
    out = {
        "token_mode": "mixed",
        "dialogues": d,
        "client_utterances": n_client,
        "counselor_utterances": n_counselor,
        "labeled_counselor_utterances": labeled,
        "unlabeled_utterances": unlabeled,
        "alternation_warnings": alternation,
        "mean_client_tokens": mean(tok_client, n_client),
        "mean_counselor_tokens": mean(tok_counselor, n_counselor),
        "mean_goals": mean(sum(goals_per), d),
        "max_goals": max(goals_per) if goals_per else None,
        "min_goals": min(goals_per) if goals_per else None,
        "mean_distinct_skills": mean(sum(skills_per), d),
        "mean_distinct_types": mean(sum(types_per), d),
        "per_skill": block(SKILLS, ""),
        "per_subtype": block(SUBTYPES, "sub:"),
        "per_type": block(TYPES, "type:"),
    }
    json.dump(out, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
