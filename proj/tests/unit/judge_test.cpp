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

#include <cstdlib>

#include <nlohmann/json.hpp>

#include "awe/errors.hpp"
#include "awe/judge.hpp"
#include "awe/mock_judge.hpp"
#include "http_stub.hpp"
#include "test_support.hpp"

namespace awe {
namespace {

using testing::ScriptedBackend;

const Question kQuestion{"q1", "Does metformin reduce mortality in heart failure?", {}};
const SourceResponse kResponse{"q1", "src", "Yes (HR 0.78).",
                               {{"d1", "Metformin users had lower mortality (HR 0.78)."}}, false};

std::string reply_for(bool d, bool a, bool g) {
  return serialize_verdict({d, a, g, "scripted"});
}

class ThrowingBackend final : public CompletionBackend {
 public:
  std::string complete(std::string_view, std::chrono::milliseconds) override {
    ++calls;
    throw TransportError("connection refused");
  }
  int calls = 0;
};

TEST(JudgeOne, RetriesUntilParseSucceeds) {
  ScriptedBackend backend({"not json", "{broken", reply_for(false, true, true)});
  JudgeConfig config;
  config.max_attempts = 3;
  const auto outcome = judge_one_detailed(kResponse, kQuestion, config, backend);
  EXPECT_EQ(outcome.record.badge, Badge::Yellow);
  EXPECT_EQ(outcome.record.judge_meta.attempts, 3);
  EXPECT_FALSE(outcome.record.judge_meta.judge_failed);
  EXPECT_EQ(outcome.backend_calls, 3);
  EXPECT_EQ(outcome.replies.size(), 3u);
  EXPECT_EQ(backend.calls(), 3u);
}

TEST(JudgeOne, ExhaustionYieldsFailedRed) {
  ScriptedBackend backend({"garbage"});
  JudgeConfig config;
  config.max_attempts = 2;
  const auto record = judge_one(kResponse, kQuestion, config, backend);
  EXPECT_EQ(record.badge, Badge::Red);
  EXPECT_TRUE(record.judge_meta.judge_failed);
  EXPECT_EQ(record.judge_meta.attempts, 2);
  EXPECT_FALSE(record.verdict.context_addresses_question);
  EXPECT_FALSE(record.verdict.assessment.empty());
  EXPECT_EQ(backend.calls(), 2u);
}

TEST(JudgeOne, NeverExceedsMaxAttempts) {
  for (int max = 1; max <= 5; ++max) {
    ScriptedBackend backend({"nope"});
    JudgeConfig config;
    config.max_attempts = max;
    judge_one(kResponse, kQuestion, config, backend);
    EXPECT_EQ(backend.calls(), static_cast<std::size_t>(max));
  }
}

TEST(JudgeOne, FirstValidReplyStopsRetrying) {
  ScriptedBackend backend({reply_for(true, true, true), "unused"});
  JudgeConfig config;
  const auto record = judge_one(kResponse, kQuestion, config, backend);
  EXPECT_EQ(record.badge, Badge::Green);
  EXPECT_EQ(record.judge_meta.attempts, 1);
  EXPECT_EQ(backend.calls(), 1u);
}

TEST(JudgeOne, TransportErrorsCountAsAttempts) {
  ThrowingBackend backend;
  JudgeConfig config;
  config.max_attempts = 3;
  const auto outcome = judge_one_detailed(kResponse, kQuestion, config, backend);
  EXPECT_EQ(backend.calls, 3);
  EXPECT_TRUE(outcome.record.judge_meta.judge_failed);
  EXPECT_EQ(outcome.record.badge, Badge::Red);
}

TEST(JudgeOne, RecordsProvenance) {
  ScriptedBackend backend({reply_for(true, true, false)});
  JudgeConfig config;
  config.model_id = "judge-x";
  const auto record = judge_one(kResponse, kQuestion, config, backend);
  EXPECT_EQ(record.question_id, "q1");
  EXPECT_EQ(record.source_id, "src");
  EXPECT_EQ(record.judge_meta.judge_model_id, "judge-x");
  const auto prompt = build_prompt(kQuestion.text, render_context(kResponse.context),
                                   kResponse.answer_text);
  EXPECT_EQ(record.judge_meta.prompt_hash, prompt.prompt_hash);
  EXPECT_EQ(record.badge, Badge::Red);
}

TEST(JudgeOne, RejectsMismatchedQuestion) {
  ScriptedBackend backend({reply_for(true, true, true)});
  const Question other{"q2", "Other?", {}};
  EXPECT_THROW(judge_one(kResponse, other, JudgeConfig{}, backend), std::invalid_argument);
}

TEST(MakeBackend, ConfigErrors) {
  JudgeConfig unknown;
  unknown.backend_id = "carrier-pigeon";
  EXPECT_THROW(make_backend(unknown), ConfigError);

  JudgeConfig no_endpoint;
  no_endpoint.backend_id = "openai";
  EXPECT_THROW(make_backend(no_endpoint), ConfigError);

  JudgeConfig no_key;
  no_key.backend_id = "openai";
  no_key.endpoint = "http://127.0.0.1:1/v1/chat/completions";
  ::unsetenv(std::string(kJudgeApiKeyEnv).c_str());
  EXPECT_THROW(make_backend(no_key), ConfigError);

  JudgeConfig zero;
  zero.max_attempts = 0;
  EXPECT_THROW(make_backend(zero), ConfigError);

  EXPECT_NE(make_backend(JudgeConfig{}), nullptr);
}

TEST(OpenAIBackend, PostsChatCompletionAndReadsContent) {
  testing::StubServer server([](const httplib::Request&, httplib::Response& res) {
    const nlohmann::json body = {
        {"choices", {{{"message", {{"role", "assistant"}, {"content", reply_for(false, true, true)}}}}}}};
    res.set_content(body.dump(), "application/json");
  });
  ::setenv(std::string(kJudgeApiKeyEnv).c_str(), "sk-test", 1);
  JudgeConfig config;
  config.backend_id = "openai";
  config.model_id = "gpt-test";
  config.endpoint = server.url("/v1/chat/completions");
  auto backend = make_backend(config);
  ::unsetenv(std::string(kJudgeApiKeyEnv).c_str());

  const auto record = judge_one(kResponse, kQuestion, config, *backend);
  EXPECT_EQ(record.badge, Badge::Yellow);

  const auto requests = server.requests();
  ASSERT_EQ(requests.size(), 1u);
  EXPECT_EQ(requests[0].path, "/v1/chat/completions");
  EXPECT_EQ(requests[0].authorization, "Bearer sk-test");
  const auto sent = nlohmann::json::parse(requests[0].body);
  EXPECT_EQ(sent["model"], "gpt-test");
  EXPECT_EQ(sent["temperature"], 0.0);
  const auto prompt = build_prompt(kQuestion.text, render_context(kResponse.context),
                                   kResponse.answer_text);
  EXPECT_EQ(sent["messages"][0]["content"], prompt.text);
}

TEST(OpenAIBackend, ServerErrorIsTransportError) {
  testing::StubServer server([](const httplib::Request&, httplib::Response& res) {
    res.status = 503;
    res.set_content("overloaded", "text/plain");
  });
  OpenAIChatBackend backend(server.url("/v1/chat/completions"), "m", "k", 0.0);
  EXPECT_THROW(backend.complete("hi", std::chrono::milliseconds(2000)), TransportError);

  JudgeConfig config;
  config.max_attempts = 2;
  const auto record = judge_one(kResponse, kQuestion, config, backend);
  EXPECT_TRUE(record.judge_meta.judge_failed);
  EXPECT_EQ(server.requests().size(), 3u);
}

TEST(OpenAIBackend, UnexpectedShapeIsTransportError) {
  testing::StubServer server([](const httplib::Request&, httplib::Response& res) {
    res.set_content(R"({"choices": []})", "application/json");
  });
  OpenAIChatBackend backend(server.url("/chat"), "m", "k", 0.0);
  EXPECT_THROW(backend.complete("hi", std::chrono::milliseconds(2000)), TransportError);
}

}  // namespace
}  // namespace awe
