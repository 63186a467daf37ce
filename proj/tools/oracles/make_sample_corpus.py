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

"""Writes the hand-written three-session sample corpus."""

import json
import sys


def c(text, skill=None, subtype=None):
    goal = None if skill is None else {"skill": skill, "subtype": subtype}
    return {"speaker": "counselor", "text": text, "goal": goal}


def u(text, behavior=None):
    goal = None if behavior is None else {"behavior": behavior}
    return {"speaker": "client", "text": text, "goal": goal}


SESSIONS = [
    {
        "session_id": "sample-001",
        "st": {"time_of_day": "late_night", "weather": None, "season": "winter",
               "location": "school"},
        "ccm": {"profile_background": "大二学生，住在宿舍", "problem_presentation": "考试前失眠",
                "comorbidity": None, "stressors": "期末考试", "treatments_received": None,
                "strengths": "愿意求助", "risk_protective_summary": "无自伤想法",
                "outcomes": None, "barriers": "时间紧张"},
        "turns": [
            c("你好，今天想聊些什么呢？", "open_questions"),
            u("最近晚上总是睡不着，一躺下就想到考试。", "narration"),
            c("听起来考试让你很紧张，晚上也放松不下来。", "feeling_reflection"),
            u("对，尤其是冬天宿舍很冷，更难入睡。", "narration"),
            c("你是说寒冷的宿舍和考试压力叠加在一起。", "restatements"),
            u("是的。我该怎么办？", "reasonable_inquiry"),
            c("睡前可以试试渐进式肌肉放松，每组肌肉先绷紧再放松。", "direct_guidance", "relaxation"),
            u("好的，我今晚试一下。", "agreeance"),
            c("失眠在考试季很常见，通常考试结束后会缓解。", "information_giving"),
            u("谢谢你。", None),
            c("今天就到这里，再见。", "others"),
        ],
    },
    {
        "session_id": "sample-002",
        "st": {"time_of_day": "morning", "weather": "rainy", "season": None, "location": "home"},
        "ccm": None,
        "turns": [
            c("Good morning. What brings you here today?", "open_questions"),
            u("I feel lonely since I moved to this city for work.", "narration"),
            c("It sounds like you feel isolated and a bit lost.", "feeling_reflection"),
            u("Yes, and the rain keeps me inside all weekend.", "narration"),
            c("I wonder if staying home makes the loneliness heavier.", "interpretations"),
            u("Maybe. I never thought of it that way.", "cognitive_behavioral_exploration"),
            c("When I moved abroad I also felt alone at first.", "self_disclosures"),
            u("Really? What did you do?", "reasonable_inquiry"),
            c("You could visit the public library nearby on rainy days.", "direct_guidance", "place"),
            u("I don't think that would help.", "impedance"),
            c("I notice I am pushing advice on you right now.", "immediacy"),
            u("It's fine, I will think about it.", "agreeance"),
            c("Some calm piano music in the morning may also lift your mood.", "direct_guidance",
              "music"),
        ],
    },
    {
        "session_id": "sample-003",
        "st": None,
        "ccm": {"profile_background": "Software engineer, 29", "problem_presentation": None,
                "comorbidity": None, "stressors": "work deadlines", "treatments_received": None,
                "strengths": None, "risk_protective_summary": None, "outcomes": None,
                "barriers": None},
        "turns": [
            c("欢迎你来，最近怎么样？", "open_questions"),
            u("Work is crazy, 每天加班到很晚。", "narration"),
            c("你每天都加班到很晚。", "restatements"),
            u("嗯。", None),
            c("规律作息和适量运动对缓解压力很有帮助。", "direct_guidance", "lifestyle"),
            u("I know, but I have no time.", "impedance"),
            c("认知行为疗法可以帮助你调整对工作的想法。", "direct_guidance", "therapy"),
            u("听起来可以试试。", "agreeance"),
        ],
    },
]


def main():
    out = open(sys.argv[1], "w", encoding="utf-8") if len(sys.argv) > 1 else sys.stdout
    for s in SESSIONS:
        out.write(json.dumps(s, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main()
