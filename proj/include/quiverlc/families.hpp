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

// Built-in quiver families.
//
//   a-inf-inf-linear   vertices Z, arrows i -> i+1
//   a-inf-ray          vertices N, arrows i -> i+1
//   figure1-right      vertices Z, arrows i -> i+1 and -k -> k for k >= 1
//   a1-tilde-cyclic    vertices {a, b}, arrows a -> b and b -> a

#ifndef QUIVERLC_FAMILIES_HPP
#define QUIVERLC_FAMILIES_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "quiverlc/lazy_quiver.hpp"

namespace quiverlc {

class UnknownFamily : public std::invalid_argument {
 public:
  explicit UnknownFamily(const std::string& name) : std::invalid_argument("unknown family: " + name) {}
};

inline std::vector<std::string> family_names() {
  return {"a-inf-inf-linear", "a-inf-ray", "figure1-right", "a1-tilde-cyclic"};
}

namespace detail {

using Adjacent = std::vector<Neighbor<VertexId>>;

inline Adjacent sorted(Adjacent list) {
  std::sort(list.begin(), list.end(), [](const auto& l, const auto& r) { return l.vertex < r.vertex; });
  return list;
}

}  // namespace detail

inline LazyQuiver family(const std::string& name) {
  using detail::Adjacent;
  if (name == "a-inf-inf-linear") {
    return LazyQuiver(
        name, Domain::integers(), [](const VertexId& v) { return Adjacent{{VertexId(v.as_integer() + 1), 1}}; },
        [](const VertexId& v) { return Adjacent{{VertexId(v.as_integer() - 1), 1}}; });
  }
  if (name == "a-inf-ray") {
    return LazyQuiver(
        name, Domain::naturals(), [](const VertexId& v) { return Adjacent{{VertexId(v.as_integer() + 1), 1}}; },
        [](const VertexId& v) {
          auto i = v.as_integer();
          return i == 0 ? Adjacent{} : Adjacent{{VertexId(i - 1), 1}};
        });
  }
  if (name == "figure1-right") {
    return LazyQuiver(
        name, Domain::integers(),
        [](const VertexId& v) {
          auto i = v.as_integer();
          Adjacent out{{VertexId(i + 1), 1}};
          if (i <= -1) out.push_back({VertexId(-i), 1});
          return detail::sorted(std::move(out));
        },
        [](const VertexId& v) {
          auto i = v.as_integer();
          Adjacent in{{VertexId(i - 1), 1}};
          if (i >= 1) in.push_back({VertexId(-i), 1});
          return detail::sorted(std::move(in));
        },
        ExteriorLinks{.left_to_right = true, .right_to_left = false});
  }
  if (name == "a1-tilde-cyclic") {
    return LazyQuiver(
        name, Domain::finite({VertexId("a"), VertexId("b")}),
        [](const VertexId& v) { return Adjacent{{VertexId(v == VertexId("a") ? "b" : "a"), 1}}; },
        [](const VertexId& v) { return Adjacent{{VertexId(v == VertexId("a") ? "b" : "a"), 1}}; });
  }
  throw UnknownFamily(name);
}

}  // namespace quiverlc

#endif  // QUIVERLC_FAMILIES_HPP
