// Copyright 2026 The Pentaform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PENTAFORM_XREAL_HPP_
#define PENTAFORM_XREAL_HPP_

#include <compare>
#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "pentaform/label.hpp"

namespace pentaform {

using Rational = boost::multiprecision::cpp_rational;

// An extended real: an exact rational, +inf or -inf.
class XReal {
 public:
  enum class Kind { kNegInf, kFinite, kPosInf };

  XReal() = default;
  XReal(const Rational& value) : value_(value) {}  // NOLINT
  XReal(long long value) : value_(value) {}       // NOLINT
  XReal(int value) : value_(value) {}             // NOLINT

  static XReal pos_inf() { return XReal(Kind::kPosInf); }
  static XReal neg_inf() { return XReal(Kind::kNegInf); }
  // Accepts "inf", "+inf", "-inf", integers, decimals and "p/q".
  // Throws DomainError on anything else.
  static XReal parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  // Throws DomainError for an infinite value.
  const Rational& finite() const;

  std::strong_ordering operator<=>(const XReal& other) const;
  bool operator==(const XReal& other) const {
    return (*this <=> other) == std::strong_ordering::equal;
  }

  // inf + (-inf) throws DomainError.
  XReal operator+(const XReal& other) const;
  XReal operator-() const;
  XReal operator-(const XReal& other) const { return *this + (-other); }
  // Scaling by a nonnegative rational; 0 * inf = 0.
  XReal scaled(const Rational& factor) const;

  // Canonical text: integers and terminating decimals as decimals, other
  // rationals as "p/q".
  std::string str() const;
  // Human rendering with repeating decimals overlined, e.g. "5/9 (= .5̄)".
  std::string pretty() const;

 private:
  explicit XReal(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::kFinite;
  Rational value_ = 0;
};

// |a - b| <= tol, with infinities equal only to themselves.
bool within(const XReal& a, const XReal& b, const Rational& tol);

// Repeating-decimal rendering of a rational, e.g. 19/45 -> ".42̄".
std::string repeating_decimal(const Rational& r);

// Stakeholder -> utility.
using Profile = std::map<Label, XReal>;

Profile operator+(const Profile& a, const Profile& b);
Profile scaled(const Profile& a, const Rational& factor);
bool within(const Profile& a, const Profile& b, const Rational& tol);
Profile zero_profile(const LabelSet& stakeholders);
// "(Kid: 2/9, Town: 4/9, Wolf: 5/9)" using str(); pretty() when asked.
std::string show(const Profile& p, bool pretty = false);

}  // namespace pentaform

#endif  // PENTAFORM_XREAL_HPP_
