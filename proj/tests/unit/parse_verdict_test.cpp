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

#include <random>

#include "awe/errors.hpp"
#include "awe/judge.hpp"
#include "reply_variants.hpp"

namespace awe {
namespace {

class AcceptedReply : public ::testing::TestWithParam<testing::ReplyCase> {};

TEST_P(AcceptedReply, ParsesToExpectedVerdict) {
  const auto& c = GetParam();
  EXPECT_EQ(parse_verdict(RawJudgeReply{c.reply}), c.expected) << c.reply;
}

INSTANTIATE_TEST_SUITE_P(Variants, AcceptedReply, ::testing::ValuesIn(testing::accepted_replies()),
                         [](const auto& info) { return info.param.name; });

class RejectedReply
    : public ::testing::TestWithParam<std::pair<std::string, std::string>> {};

TEST_P(RejectedReply, ThrowsParseError) {
  EXPECT_THROW(parse_verdict(RawJudgeReply{GetParam().second}), ParseError) << GetParam().second;
}

INSTANTIATE_TEST_SUITE_P(Variants, RejectedReply, ::testing::ValuesIn(testing::rejected_replies()),
                         [](const auto& info) { return info.param.first; });

TEST(ParseVerdict, AtLeastTwentyAcceptedVariants) {
  EXPECT_GE(testing::accepted_replies().size(), 20u);
}

TEST(ParseVerdict, RoundTripsEveryVerdict) {
  std::mt19937_64 rng(1234);
  const std::string texts[] = {"", "ok", "quote \" and backslash \\", "line\nbreak", "{json}",
                               "\xce\xbc g/mL"};
  for (int bits = 0; bits < 8; ++bits) {
    for (const auto& t : texts) {
      const CriteriaVerdict v{(bits & 4) != 0, (bits & 2) != 0, (bits & 1) != 0, t};
      EXPECT_EQ(parse_verdict(RawJudgeReply{serialize_verdict(v)}), v);
    }
  }
}

TEST(ParseVerdict, InsensitiveToKeyOrderAndWhitespace) {
  const char* keys[] = {"context_answers_question_directly", "context_addresses_question",
                        "answer_grounded_in_context", "assessment"};
  const char* values[] = {"true", "false", "true", "\"a\""};
  std::vector<int> order = {0, 1, 2, 3};
  std::mt19937_64 rng(99);
  const CriteriaVerdict expected{true, false, true, "a"};
  const char* pads[] = {"", " ", "\n", "\t\t", " \n "};
  std::uniform_int_distribution<std::size_t> pad(0, std::size(pads) - 1);
  for (int round = 0; round < 50; ++round) {
    std::shuffle(order.begin(), order.end(), rng);
    std::string body = "{";
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i > 0) body += ",";
      body += pads[pad(rng)];
      body += std::string("\"") + keys[order[i]] + "\"" + pads[pad(rng)] + ":" + pads[pad(rng)] +
              values[order[i]];
      body += pads[pad(rng)];
    }
    body += "}";
    EXPECT_EQ(parse_verdict(RawJudgeReply{body}), expected) << body;
  }
}

TEST(ParseVerdict, FirstObjectWins) {
  const std::string reply =
      R"({"context_answers_question_directly": true, "context_addresses_question": true, "answer_grounded_in_context": true} and later {"context_answers_question_directly": false, "context_addresses_question": false, "answer_grounded_in_context": false})";
  const CriteriaVerdict v = parse_verdict(RawJudgeReply{reply});
  EXPECT_TRUE(v.context_answers_question_directly);
  EXPECT_TRUE(v.answer_grounded_in_context);
}

}  // namespace
}  // namespace awe
