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

#ifndef QUIVERLC_EXT_DISTANCE_HPP
#define QUIVERLC_EXT_DISTANCE_HPP

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace quiverlc {

/// A distance in Z extended by infinity, or a lower bound when a search ran
/// out of budget before settling its target.
class ExtDistance {
 public:
  enum class Kind { finite, infinite, at_least };

  static ExtDistance finite(std::int64_t value, std::uint64_t expansions = 0) {
    return {Kind::finite, value, expansions};
  }
  static ExtDistance infinite(std::uint64_t expansions = 0) { return {Kind::infinite, 0, expansions}; }
  static ExtDistance at_least(std::int64_t bound, std::uint64_t expansions = 0) {
    return {Kind::at_least, bound, expansions};
  }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_infinite() const { return kind_ == Kind::infinite; }
  bool is_at_least() const { return kind_ == Kind::at_least; }
  bool is_exact() const { return kind_ != Kind::at_least; }

  std::int64_t value() const {
    if (kind_ != Kind::finite) throw std::logic_error("distance is not finite: " + to_string());
    return value_;
  }
  std::int64_t bound() const {
    if (kind_ != Kind::at_least) throw std::logic_error("distance is not a lower bound: " + to_string());
    return value_;
  }
  std::uint64_t expansions() const { return expansions_; }

  /// The same distance moved by n (finite values and bounds shift, infinity stays).
  ExtDistance shifted(std::int64_t n) const {
    ExtDistance d = *this;
    if (kind_ != Kind::infinite) d.value_ += n;
    return d;
  }

  /// Infinity absorbs; otherwise a bound on either side makes a bound.
  friend ExtDistance operator+(const ExtDistance& a, const ExtDistance& b) {
    std::uint64_t exp = a.expansions_ + b.expansions_;
    if (a.is_infinite() || b.is_infinite()) return infinite(exp);
    if (a.is_at_least() || b.is_at_least()) return at_least(a.value_ + b.value_, exp);
    return finite(a.value_ + b.value_, exp);
  }

  /// Compares the mathematical value only; expansion counts are metadata.
  friend bool operator==(const ExtDistance& a, const ExtDistance& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ == Kind::infinite || a.value_ == b.value_;
  }

  std::string to_string() const {
    switch (kind_) {
      case Kind::finite:
        return std::to_string(value_);
      case Kind::infinite:
        return "inf";
      case Kind::at_least:
        return ">=" + std::to_string(value_);
    }
    return "?";
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtDistance& d) { return os << d.to_string(); }

 private:
  ExtDistance(Kind kind, std::int64_t value, std::uint64_t expansions)
      : kind_(kind), value_(value), expansions_(expansions) {}

  Kind kind_;
  std::int64_t value_;
  std::uint64_t expansions_;
};

}  // namespace quiverlc

#endif  // QUIVERLC_EXT_DISTANCE_HPP
