// Copyright 2026 The quiverlc Authors
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

#ifndef QUIVERLC_VERTEX_HPP
#define QUIVERLC_VERTEX_HPP

#include <charconv>
#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace quiverlc {

/// Identifier of a quiver vertex: an integer (built-in families, numeric file
/// tokens) or an arbitrary string (named vertices in quiver files).
class VertexId {
 public:
  VertexId() : value_(std::int64_t{0}) {}
  template <std::integral I>
  VertexId(I value) : value_(static_cast<std::int64_t>(value)) {}
  VertexId(std::string name) : value_(std::move(name)) {}
  VertexId(const char* name) : value_(std::string(name)) {}

  /// Canonical decimal tokens ("0", "-12") become integers, everything else
  /// stays a string. "01" and "+3" are strings.
  static VertexId parse(std::string_view token) {
    if (is_canonical_integer(token)) {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec == std::errc() && ptr == token.data() + token.size()) return VertexId(v);
    }
    return VertexId(std::string(token));
  }

  bool is_integer() const { return std::holds_alternative<std::int64_t>(value_); }

  std::int64_t as_integer() const {
    if (!is_integer()) throw std::logic_error("vertex '" + to_string() + "' is not integer-indexed");
    return std::get<std::int64_t>(value_);
  }

  std::string to_string() const {
    if (is_integer()) return std::to_string(std::get<std::int64_t>(value_));
    return std::get<std::string>(value_);
  }

  friend bool operator==(const VertexId&, const VertexId&) = default;

  // Integers sort numerically before all strings.
  friend std::strong_ordering operator<=>(const VertexId& a, const VertexId& b) {
    if (a.value_.index() != b.value_.index()) return a.value_.index() <=> b.value_.index();
    if (a.is_integer()) return std::get<std::int64_t>(a.value_) <=> std::get<std::int64_t>(b.value_);
    return std::get<std::string>(a.value_).compare(std::get<std::string>(b.value_)) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const VertexId& v) { return os << v.to_string(); }

  std::size_t hash() const {
    if (is_integer()) return std::hash<std::int64_t>{}(std::get<std::int64_t>(value_));
    return std::hash<std::string>{}(std::get<std::string>(value_)) ^ 0x9e3779b97f4a7c15ULL;
  }

 private:
  static bool is_canonical_integer(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (s[0] == '-') {
      if (s.size() == 1) return false;
      i = 1;
    }
    if (s[i] == '0') return s.size() == i + 1 && i == 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return s.size() <= 19;
  }

  std::variant<std::int64_t, std::string> value_;
};

}  // namespace quiverlc

template <>
struct std::hash<quiverlc::VertexId> {
  std::size_t operator()(const quiverlc::VertexId& v) const noexcept { return v.hash(); }
};

#endif  // QUIVERLC_VERTEX_HPP
