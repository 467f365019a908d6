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

#include <gtest/gtest.h>

#include "awe/judge.hpp"
#include "test_support.hpp"

namespace awe {
namespace {

using testing::golden_path;
using testing::read_file;

std::size_t occurrences(std::string_view haystack, std::string_view needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string_view::npos;
       pos = haystack.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

TEST(BuildPrompt, MatchesGoldenFile) {
  const JudgePrompt p = build_prompt("Does metformin reduce mortality in heart failure?",
                                     "[d1]\nMetformin users had lower mortality (HR 0.78).",
                                     "Yes, lower mortality (HR 0.78).");
  EXPECT_EQ(p.text, read_file(golden_path("prompt_fixed.txt")));
}

TEST(BuildPrompt, GroundingCriterionSpansTwoLines) {
  const JudgePrompt p = build_prompt("Q?", "CTX", "ANS");
  EXPECT_NE(p.text.find("3. The AI's answer is well-grounded in the provided context (no external\n"
                        "information or hallucinations)."),
            std::string::npos);
}

TEST(BuildPrompt, HashIsStableAndContentAddressed) {
  const JudgePrompt a = build_prompt("Q?", "CTX", "ANS");
  const JudgePrompt b = build_prompt("Q?", "CTX", "ANS");
  EXPECT_EQ(a.prompt_hash, b.prompt_hash);
  EXPECT_EQ(a.prompt_hash.size(), 64u);
  EXPECT_EQ(a.prompt_hash.find_first_not_of("0123456789abcdef"), std::string::npos);
  EXPECT_NE(a.prompt_hash, build_prompt("Q?", "CTX", "ANS!").prompt_hash);
}

TEST(BuildPrompt, EmptyContextUsesSentinel) {
  const JudgePrompt p = build_prompt("Q?", "", "ANS");
  EXPECT_NE(p.text.find("# Context provided:\nno context retrieved\n"), std::string::npos);
}

TEST(BuildPrompt, SectionsOnceAndNoPlaceholders) {
  const std::pair<const char*, const char*> inputs[] = {
      {"Q?", "CTX"}, {"multi\nline\nquestion", ""}, {"", "[d]\nx"}};
  for (const auto& [q, c] : inputs) {
    const std::string text = build_prompt(q, c, "A").text;
    for (const char* header : {"# Task\n", "# Evaluation Criteria", "# Original question\n",
                               "# Context provided:\n", "# AI's answer:\n", "# Format\n"}) {
      EXPECT_EQ(occurrences(text, header), 1u) << header;
    }
    for (const char* slot : {"{question}", "{context}", "{answer}"}) {
      EXPECT_EQ(occurrences(text, slot), 0u) << slot;
    }
  }
}

TEST(BuildPrompt, SubstitutedTextIsNotRescanned) {
  // A question that happens to contain a slot name is inserted literally and
  // does not capture the context.
  const std::string text = build_prompt("about {context}?", "CTX", "ANS").text;
  EXPECT_NE(text.find("# Original question\nabout {context}?\n"), std::string::npos);
  EXPECT_NE(text.find("# Context provided:\nCTX\n"), std::string::npos);
}

TEST(PromptTemplate, HashIdentifiesTemplate) {
  EXPECT_EQ(prompt_template_hash().size(), 64u);
  EXPECT_EQ(occurrences(prompt_template(), "{question}"), 1u);
  EXPECT_EQ(occurrences(prompt_template(), "{context}"), 1u);
  EXPECT_EQ(occurrences(prompt_template(), "{answer}"), 1u);
}

TEST(RenderContext, Examples) {
  EXPECT_EQ(render_context({}), "no context retrieved");
  const std::vector<ContextRecord> one = {{"d1", "abc"}};
  EXPECT_EQ(render_context(one), "[d1]\nabc");
  const std::vector<ContextRecord> two = {{"d1", "a"}, {"d2", "b"}};
  // Built from the stated rule: blocks "[id]\ntext" joined by one blank line.
  const std::string expected = std::string("[d1]") + "\n" + "a" + "\n\n" + "[d2]" + "\n" + "b";
  EXPECT_EQ(render_context(two), expected);
}

TEST(RenderContext, PreservesInputOrder) {
  const std::vector<ContextRecord> recs = {{"z", "1"}, {"a", "2"}, {"m", "3"}};
  EXPECT_EQ(render_context(recs), "[z]\n1\n\n[a]\n2\n\n[m]\n3");
}

}  // namespace
}  // namespace awe
