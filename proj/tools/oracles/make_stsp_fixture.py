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

"""Builds the 100-sentence labeled spatiotemporal fixture.

Each sentence is assembled from cue phrases whose field and value are fixed
by construction, so the labels do not come from the extractor under test.
"""

import json
import random
import sys

CUES = {
    ("time_of_day", "morning"): ["this morning", "right after getting up", "at breakfast",
                                 "at 7 am", "早上", "起床以后"],
    ("time_of_day", "afternoon"): ["this afternoon", "after lunch", "at 3 pm", "下午", "午休的时候"],
    ("time_of_day", "evening"): ["this evening", "after dinner", "at 8 pm", "晚上", "傍晚"],
    ("time_of_day", "late_night"): ["late at night", "at 2 am", "in the middle of the night",
                                    "深夜", "凌晨三点"],
    ("weather", "rainy"): ["while it is raining", "on this rainy day", "下雨的时候"],
    ("weather", "heatwave"): ["in this heat wave", "when it is scorching outside", "高温天"],
    ("weather", "sunny"): ["on a sunny day", "in the sunshine", "晴天"],
    ("season", "spring"): ["this spring", "春天"],
    ("season", "summer"): ["this summer", "夏天"],
    ("season", "autumn"): ["this autumn", "秋天"],
    ("season", "winter"): ["this winter", "冬天"],
    ("location", "home"): ["at home", "在家"],
    ("location", "school"): ["in the dormitory", "at school", "在宿舍", "在学校"],
    ("location", "company"): ["at the office", "在公司"],
}
SUBJECTS_EN = ["I feel anxious", "I keep thinking about my exams", "I argued with my mother",
               "I feel very tired", "I cannot focus", "I miss my old friends"]
SUBJECTS_ZH = ["我觉得很焦虑", "我一直在想考试的事", "我和妈妈吵架了", "我感觉很累", "我没法集中注意力"]
PLAIN = ["I don't know what to do with my life.", "My friend stopped talking to me.",
         "I think nobody understands me.", "我不知道该怎么办。", "我觉得自己不够好。",
         "Can we talk about my relationship?", "最近心情一直不好。", "I feel empty."]
FIELDS = ["time_of_day", "weather", "season", "location"]


def is_zh(phrase):
    return any("一" <= ch <= "鿿" for ch in phrase)


def sentence(rng, picks):
    zh = rng.random() < 0.5
    chosen = []
    for p in picks:
        options = [x for x in CUES[p] if is_zh(x) == zh] or CUES[p]
        chosen.append(options[rng.randrange(len(options))])
    if zh:
        return "".join(chosen) + SUBJECTS_ZH[rng.randrange(len(SUBJECTS_ZH))] + "。"
    return SUBJECTS_EN[rng.randrange(len(SUBJECTS_EN))] + " " + " and ".join(chosen) + "."


def main():
    rng = random.Random(20240601)
    rows = []
    # The "getting up" cue is always represented.
    rows.append({"text": "Right after getting up I already feel exhausted.",
                 "gold": {"time_of_day": "morning", "weather": None, "season": None, "location": None}})
    for text in PLAIN:
        rows.append({"text": text, "gold": {f: None for f in FIELDS}})
    while len(rows) < 100:
        n = rng.choice([1, 1, 2, 2, 3])
        fields = rng.sample(FIELDS, n)
        picks = []
        for f in fields:
            values = [v for (ff, v) in CUES if ff == f]
            picks.append((f, rng.choice(values)))
        gold = {f: None for f in FIELDS}
        for f, v in picks:
            gold[f] = v
        rows.append({"text": sentence(rng, picks), "gold": gold})
    out = open(sys.argv[1], "w", encoding="utf-8") if len(sys.argv) > 1 else sys.stdout
    for r in rows:
        out.write(json.dumps(r, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main()
