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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace awe {

// Base of every error the library reports. Callers that only care about
// "something went wrong" can catch this; the CLI maps it to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Judge reply could not be turned into a verdict. Retryable.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Bad configuration detected before any work starts.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class MissingFixture : public Error {
 public:
  using Error::Error;
};

// Timeout, connection failure or non-2xx status from a remote endpoint.
class TransportError : public Error {
 public:
  using Error::Error;
};

class SampleTooLarge : public Error {
 public:
  using Error::Error;
};

class UnknownSource : public Error {
 public:
  using Error::Error;
};

// A metric was requested over a question set that is empty after taking
// the intersection of the involved sources.
class EmptyIntersection : public Error {
 public:
  using Error::Error;
};

class DuplicateRecord : public Error {
 public:
  using Error::Error;
};

class MalformedRecord : public Error {
 public:
  MalformedRecord(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace awe
