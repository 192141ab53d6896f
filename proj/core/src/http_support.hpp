/*
 * Copyright 2026 The Memento Toolkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MEMENTO_SRC_HTTP_SUPPORT_HPP
#define MEMENTO_SRC_HTTP_SUPPORT_HPP

#include <optional>
#include <string>
#include <string_view>

namespace memento::detail {

struct SplitUrl {
  std::string origin;  // scheme://host[:port]
  std::string target;  // /path?query, never empty
};

/// Splits an absolute http(s) URL into client origin and request target.
inline std::optional<SplitUrl> split_url(std::string_view url) {
  std::size_t scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos) return std::nullopt;
  std::string_view scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") return std::nullopt;
  std::size_t authority_start = scheme_end + 3;
  if (authority_start >= url.size()) return std::nullopt;
  std::size_t path_start = url.find('/', authority_start);
  if (path_start == std::string_view::npos) {
    return SplitUrl{std::string(url), "/"};
  }
  if (path_start == authority_start) return std::nullopt;  // empty host
  return SplitUrl{std::string(url.substr(0, path_start)),
                  std::string(url.substr(path_start))};
}

/// Resolves a Location header value against the origin of the request it
/// answered. Absolute URLs pass through; origin-relative paths are joined.
inline std::optional<std::string> resolve_location(const std::string& origin,
                                                   std::string_view location) {
  if (location.empty()) return std::nullopt;
  if (location.find("://") != std::string_view::npos) {
    return std::string(location);
  }
  if (location.front() == '/') return origin + std::string(location);
  return std::nullopt;  // other relative forms are not produced by our peers
}

}  // namespace memento::detail

#endif  // MEMENTO_SRC_HTTP_SUPPORT_HPP
