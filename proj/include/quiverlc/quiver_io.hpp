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

// Line-based quiver files:
//
//   # comment
//   vertex <id>
//   arrow <src> <dst> [multiplicity]

#ifndef QUIVERLC_QUIVER_IO_HPP
#define QUIVERLC_QUIVER_IO_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quiverlc/quiver.hpp"

namespace quiverlc {

enum class ParseMode {
  lenient,  // arrow endpoints are declared implicitly
  strict,   // every arrow endpoint needs a `vertex` line
};

enum class Severity { warning, error };

struct Diagnostic {
  Severity severity = Severity::error;
  std::size_t line = 0;  // 1-based; 0 when not tied to a line
  std::string message;
  std::vector<std::string> witnesses;
};

struct Diagnostics {
  std::vector<Diagnostic> items;

  bool empty() const { return items.empty(); }
  bool has_errors() const {
    return std::any_of(items.begin(), items.end(), [](const Diagnostic& d) { return d.severity == Severity::error; });
  }
};

class QuiverParseError : public std::runtime_error {
 public:
  QuiverParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

struct ParsedSource {
  std::set<VertexId> declared;
  std::vector<std::pair<std::size_t, std::pair<VertexId, VertexId>>> arrow_lines;
  std::map<std::pair<VertexId, VertexId>, std::uint64_t> arrows;
  Diagnostics diagnostics;
};

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

inline ParsedSource scan(std::string_view text, ParseMode mode) {
  ParsedSource out;
  auto error = [&](std::size_t line, std::string msg, std::vector<std::string> witnesses = {}) {
    out.diagnostics.items.push_back({Severity::error, line, std::move(msg), std::move(witnesses)});
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_tokens(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }

    if (tokens[0] == "vertex") {
      if (tokens.size() != 2) {
        error(line_no, "expected 'vertex <id>'");
      } else {
        out.declared.insert(VertexId::parse(tokens[1]));
      }
    } else if (tokens[0] == "arrow") {
      if (tokens.size() != 3 && tokens.size() != 4) {
        error(line_no, "expected 'arrow <src> <dst> [multiplicity]'");
      } else {
        std::uint64_t mult = 1;
        if (tokens.size() == 4) {
          auto tok = tokens[3];
          auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), mult);
          if (ec != std::errc() || ptr != tok.data() + tok.size() || mult == 0) {
            error(line_no, "multiplicity must be a positive integer, got '" + std::string(tok) + "'");
            if (end == text.size()) break;
            continue;
          }
        }
        VertexId src = VertexId::parse(tokens[1]);
        VertexId dst = VertexId::parse(tokens[2]);
        out.arrow_lines.push_back({line_no, {src, dst}});
        out.arrows[{src, dst}] += mult;
      }
    } else {
      error(line_no, "unknown directive '" + std::string(tokens[0]) + "'");
    }
    if (end == text.size()) break;
  }

  // Declarations are order-insensitive, so endpoints are checked afterwards.
  for (const auto& [line, arrow] : out.arrow_lines) {
    for (const auto& endpoint : {arrow.first, arrow.second}) {
      if (!out.declared.contains(endpoint)) {
        if (mode == ParseMode::strict) {
          error(line, "undeclared vertex '" + endpoint.to_string() + "'", {endpoint.to_string()});
        }
      }
    }
  }
  std::stable_sort(out.diagnostics.items.begin(), out.diagnostics.items.end(),
                   [](const Diagnostic& a, const Diagnostic& b) { return a.line < b.line; });
  return out;
}

}  // namespace detail

/// All problems in a quiver source, without throwing. Empty iff
/// parse_quiver(text, mode) succeeds.
inline Diagnostics diagnose_quiver(std::string_view text, ParseMode mode = ParseMode::lenient) {
  return detail::scan(text, mode).diagnostics;
}

/// Throws QuiverParseError for the first problem in the source.
inline Quiver parse_quiver(std::string_view text, ParseMode mode = ParseMode::lenient) {
  auto parsed = detail::scan(text, mode);
  if (!parsed.diagnostics.empty()) {
    const auto& first = parsed.diagnostics.items.front();
    throw QuiverParseError(first.line, first.message);
  }
  for (const auto& [key, mult] : parsed.arrows) {
    parsed.declared.insert(key.first);
    parsed.declared.insert(key.second);
  }
  return Quiver(std::move(parsed.declared), std::move(parsed.arrows));
}

/// Vertices sorted by printed id, then arrows sorted by (src, dst) printed ids.
/// The output is strict-mode parseable.
inline std::string serialize_quiver(const Quiver& q) {
  std::vector<std::string> names;
  for (const auto& v : q.vertices()) names.push_back(v.to_string());
  std::sort(names.begin(), names.end());

  std::vector<std::pair<std::pair<std::string, std::string>, std::uint64_t>> arrows;
  for (const auto& [key, mult] : q.arrows()) arrows.push_back({{key.first.to_string(), key.second.to_string()}, mult});
  std::sort(arrows.begin(), arrows.end());

  std::ostringstream os;
  for (const auto& n : names) os << "vertex " << n << '\n';
  for (const auto& [key, mult] : arrows) {
    os << "arrow " << key.first << ' ' << key.second;
    if (mult != 1) os << ' ' << mult;
    os << '\n';
  }
  return os.str();
}

}  // namespace quiverlc

#endif  // QUIVERLC_QUIVER_IO_HPP
