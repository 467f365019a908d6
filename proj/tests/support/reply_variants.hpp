// Copyright 2026 The AWE Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Judge reply variants with the verdict each must parse to, plus replies
// that must be rejected.

#include <string>
#include <vector>

#include "awe/types.hpp"

namespace awe::testing {

struct ReplyCase {
  std::string name;
  std::string reply;
  CriteriaVerdict expected;
};

inline std::vector<ReplyCase> accepted_replies() {
  const CriteriaVerdict ttt_ok{true, true, true, "ok"};
  const CriteriaVerdict ttf{true, true, false, ""};
  const std::string canonical =
      R"({"quality_assessment": {"context_answers_question_directly": true, )"
      R"("context_addresses_question": true, "answer_grounded_in_context": true, "assessment": "ok"}})";
  return {
      {"canonical_wrapped", canonical, ttt_ok},
      {"bare_object",
       R"({"context_answers_question_directly": true, "context_addresses_question": true, "answer_grounded_in_context": true, "assessment": "ok"})",
       ttt_ok},
      {"fenced_json_with_prose", "Here is my evaluation.\n\n```json\n" + canonical + "\n```\n", ttt_ok},
      {"fenced_no_language", "```\n" + canonical + "\n```", ttt_ok},
      {"prose_before_and_after",
       "After reviewing the context carefully: " + canonical + " Let me know if you need more.",
       ttt_ok},
      {"title_case_strings",
       R"({"context_answers_question_directly": "True", "context_addresses_question": "True", "answer_grounded_in_context": "False"})",
       ttf},
      {"lower_case_strings",
       R"({"quality_assessment": {"context_answers_question_directly": "true", "context_addresses_question": "true", "answer_grounded_in_context": "false"}})",
       ttf},
      {"extra_keys",
       R"({"model": "x", "quality_assessment": {"confidence": 0.9, "context_answers_question_directly": true, "context_addresses_question": true, "answer_grounded_in_context": true, "assessment": "ok", "notes": [1, 2]}, "usage": {"tokens": 12}})",
       ttt_ok},
      {"missing_assessment",
       R"({"quality_assessment": {"context_answers_question_directly": true, "context_addresses_question": true, "answer_grounded_in_context": false}})",
       ttf},
      {"null_assessment",
       R"({"context_answers_question_directly": true, "context_addresses_question": true, "answer_grounded_in_context": false, "assessment": null})",
       ttf},
      {"shuffled_key_order",
       R"({"quality_assessment": {"assessment": "ok", "answer_grounded_in_context": true, "context_addresses_question": true, "context_answers_question_directly": true}})",
       ttt_ok},
      {"heavy_whitespace",
       "{\n\t\"quality_assessment\"  :\n  {\n   \"context_answers_question_directly\" :\ttrue ,\n"
       "   \"context_addresses_question\"   : true,\n\n   \"answer_grounded_in_context\":true,\n"
       "   \"assessment\" : \"ok\"\n  }\n}\n",
       ttt_ok},
      {"python_literal_braced",
       "{'quality_assessment': {'context_answers_question_directly': False, "
       "'context_addresses_question': True, 'answer_grounded_in_context': True, "
       "'assessment': 'indirect evidence only'}}",
       {false, true, true, "indirect evidence only"}},
      {"python_literal_prompt_style",
       "'quality_assessment': {\n    'context_answers_question_directly': False,\n"
       "    'context_addresses_question': True,\n    'answer_grounded_in_context': True,\n"
       "    'assessment': 'The response accurately reflects the information available\n"
       "in the context.'\n}",
       {false, true, true, "The response accurately reflects the information available\nin the context."}},
      {"python_literal_escaped_apostrophe",
       "{'context_answers_question_directly': True, 'context_addresses_question': True, "
       "'answer_grounded_in_context': False, 'assessment': 'doesn\\'t cite [18]'}",
       {true, true, false, "doesn't cite [18]"}},
      {"trailing_commas",
       "{\"quality_assessment\": {\"context_answers_question_directly\": true,\n"
       "\"context_addresses_question\": true, \"answer_grounded_in_context\": true, "
       "\"assessment\": \"ok\",\n},\n}",
       ttt_ok},
      {"braces_inside_assessment",
       R"({"context_answers_question_directly": false, "context_addresses_question": false, "answer_grounded_in_context": false, "assessment": "uses {placeholders} and } stray"})",
       {false, false, false, "uses {placeholders} and } stray"}},
      {"non_json_braces_first",
       "I drafted {a rough outline} first, then: " + canonical, ttt_ok},
      {"yellow_verdict",
       R"({"quality_assessment": {"context_answers_question_directly": false, "context_addresses_question": true, "answer_grounded_in_context": true, "assessment": "related but indirect"}})",
       {false, true, true, "related but indirect"}},
      {"all_false",
       R"({"context_answers_question_directly": false, "context_addresses_question": false, "answer_grounded_in_context": false, "assessment": ""})",
       {false, false, false, ""}},
      {"crlf_line_endings",
       "{\r\n\"quality_assessment\": {\r\n\"context_answers_question_directly\": true,\r\n"
       "\"context_addresses_question\": true,\r\n\"answer_grounded_in_context\": true,\r\n"
       "\"assessment\": \"ok\"\r\n}\r\n}\r\n",
       ttt_ok},
      {"unicode_and_escapes",
       R"({"context_answers_question_directly": true, "context_addresses_question": true, "answer_grounded_in_context": false, "assessment": "cites \"[18]\" at p≤0.05"})",
       {true, true, false, "cites \"[18]\" at p≤0.05"}},
      {"wrapper_not_first_key",
       R"({"id": "r1", "quality_assessment": {"context_answers_question_directly": true, "context_addresses_question": true, "answer_grounded_in_context": true, "assessment": "ok"}})",
       ttt_ok},
      {"mixed_bool_forms",
       R"({"context_answers_question_directly": "False", "context_addresses_question": true, "answer_grounded_in_context": "TRUE", "assessment": "ok"})",
       {false, true, true, "ok"}},
  };
}

// Replies that must raise ParseError.
inline std::vector<std::pair<std::string, std::string>> rejected_replies() {
  std::vector<std::pair<std::string, std::string>> out;
  const char* keys[] = {"context_answers_question_directly", "context_addresses_question",
                        "answer_grounded_in_context"};
  for (int missing = 0; missing < 3; ++missing) {
    std::string inner;
    for (int k = 0; k < 3; ++k) {
      if (k == missing) continue;
      inner += std::string("\"") + keys[k] + "\": true, ";
    }
    inner += "\"assessment\": \"x\"";
    out.emplace_back(std::string("missing_") + keys[missing] + "_bare", "{" + inner + "}");
    out.emplace_back(std::string("missing_") + keys[missing] + "_wrapped",
                     "{\"quality_assessment\": {" + inner + "}}");
    out.emplace_back(std::string("missing_") + keys[missing] + "_fenced",
                     "Result:\n```json\n{\"quality_assessment\": {" + inner + "}}\n```");
    out.emplace_back(std::string("missing_") + keys[missing] + "_python",
                     "{'quality_assessment': {" + inner + "}}");
  }
  out.emplace_back("empty_reply", "");
  out.emplace_back("prose_only", "The answer looks well grounded to me.");
  out.emplace_back("unbalanced",
                   "{\"context_answers_question_directly\": true, \"context_addresses_question\": true");
  out.emplace_back("json_array", "[true, true, true]");
  out.emplace_back("uninterpretable_string",
                   R"({"context_answers_question_directly": "maybe", "context_addresses_question": true, "answer_grounded_in_context": true})");
  out.emplace_back("numeric_boolean",
                   R"({"context_answers_question_directly": 1, "context_addresses_question": true, "answer_grounded_in_context": true})");
  out.emplace_back("null_boolean",
                   R"({"context_answers_question_directly": true, "context_addresses_question": null, "answer_grounded_in_context": true})");
  out.emplace_back("wrapper_empty", R"({"quality_assessment": {}})");
  return out;
}

}  // namespace awe::testing
