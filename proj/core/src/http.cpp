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
#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "http.hpp"

#include <httplib.h>

#include "awe/errors.hpp"

namespace awe::detail {

ParsedUrl parse_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw ConfigError("not an absolute URL: " + url);
  const std::string scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") {
    throw ConfigError("unsupported URL scheme '" + scheme + "' in " + url);
  }
  const auto host_begin = scheme_end + 3;
  const auto path_begin = url.find('/', host_begin);
  ParsedUrl parsed;
  parsed.scheme_host_port = url.substr(0, path_begin);
  parsed.path = path_begin == std::string::npos ? "/" : url.substr(path_begin);
  if (parsed.scheme_host_port.size() <= host_begin) throw ConfigError("URL has no host: " + url);
  return parsed;
}

HttpResponse http_post_json(const std::string& url, const std::string& body,
                            const Headers& headers, std::chrono::milliseconds timeout) {
  const ParsedUrl parsed = parse_url(url);
  httplib::Client client(parsed.scheme_host_port);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);
  httplib::Headers hdrs;
  for (const auto& [k, v] : headers) hdrs.emplace(k, v);
  auto result = client.Post(parsed.path, hdrs, body, "application/json");
  if (!result) {
    throw TransportError("POST " + url + " failed: " + httplib::to_string(result.error()));
  }
  if (result->status < 200 || result->status >= 300) {
    throw TransportError("POST " + url + " returned HTTP " + std::to_string(result->status));
  }
  return {result->status, result->body};
}

}  // namespace awe::detail
