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

// Internal: minimal blocking HTTP(S) POST on top of cpp-httplib.

#include <chrono>
#include <string>
#include <utility>
#include <vector>

namespace awe::detail {

struct ParsedUrl {
  std::string scheme_host_port;  // "http://host:port"
  std::string path;              // "/v1/x?y", never empty
};

// Throws ConfigError on anything but http:// or https:// URLs.
ParsedUrl parse_url(const std::string& url);

struct HttpResponse {
  int status = 0;
  std::string body;
};

using Headers = std::vector<std::pair<std::string, std::string>>;

// Throws TransportError on connection failure, timeout or non-2xx status.
HttpResponse http_post_json(const std::string& url, const std::string& body,
                            const Headers& headers, std::chrono::milliseconds timeout);

}  // namespace awe::detail
