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

#include "pentaform/xreal.hpp"

#include <cctype>
#include <map>

#include "pentaform/errors.hpp"

namespace pentaform {

namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

cpp_int pow10(std::size_t n) {
  cpp_int out = 1;
  for (std::size_t i = 0; i < n; ++i) out *= 10;
  return out;
}

}  // namespace

XReal XReal::parse(std::string_view text) {
  if (text == "inf" || text == "+inf") return pos_inf();
  if (text == "-inf") return neg_inf();
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw DomainError("not a number: " + std::string(text));
    }
    const cpp_int d{std::string(den)};
    if (d == 0) throw DomainError("zero denominator: " + std::string(text));
    value = Rational(cpp_int(std::string(num)), d);
  } else {
    auto dot = body.find('.');
    std::string_view whole = body.substr(0, dot);
    std::string_view frac =
        dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) ||
        (!whole.empty() && !all_digits(whole)) ||
        (dot != std::string_view::npos && !frac.empty() && !all_digits(frac))) {
      throw DomainError("not a number: " + std::string(text));
    }
    cpp_int w = whole.empty() ? cpp_int(0) : cpp_int(std::string(whole));
    cpp_int f = frac.empty() ? cpp_int(0) : cpp_int(std::string(frac));
    const cpp_int scale = pow10(frac.size());
    value = Rational(w * scale + f, scale);
  }
  return XReal(negative ? Rational(-value) : value);
}

const Rational& XReal::finite() const {
  if (!is_finite()) throw DomainError("infinite value " + str());
  return value_;
}

std::strong_ordering XReal::operator<=>(const XReal& other) const {
  if (kind_ != other.kind_) {
    return static_cast<int>(kind_) <=> static_cast<int>(other.kind_);
  }
  if (!is_finite()) return std::strong_ordering::equal;
  if (value_ < other.value_) return std::strong_ordering::less;
  if (value_ > other.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

XReal XReal::operator+(const XReal& other) const {
  if (is_finite() && other.is_finite()) return XReal(Rational(value_ + other.value_));
  if (!is_finite() && !other.is_finite() && kind_ != other.kind_) {
    throw DomainError("inf + -inf is undefined");
  }
  return XReal(is_finite() ? other.kind_ : kind_);
}

XReal XReal::operator-() const {
  switch (kind_) {
    case Kind::kNegInf: return pos_inf();
    case Kind::kPosInf: return neg_inf();
    case Kind::kFinite: break;
  }
  return XReal(Rational(-value_));
}

XReal XReal::scaled(const Rational& factor) const {
  if (factor < 0) throw DomainError("negative scale factor");
  if (factor == 0) return XReal(0);
  if (!is_finite()) return *this;
  return XReal(Rational(value_ * factor));
}

std::string XReal::str() const {
  if (kind_ == Kind::kPosInf) return "inf";
  if (kind_ == Kind::kNegInf) return "-inf";
  const cpp_int num = boost::multiprecision::numerator(value_);
  cpp_int den = boost::multiprecision::denominator(value_);
  cpp_int d = den;
  std::size_t twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1) return num.str() + "/" + den.str();
  const std::size_t digits = std::max(twos, fives);
  const cpp_int scaled_num = num * (pow10(digits) / den);
  const bool negative = scaled_num < 0;
  std::string s = (negative ? cpp_int(-scaled_num) : scaled_num).str();
  if (digits > 0) {
    if (s.size() <= digits) s.insert(0, digits - s.size() + 1, '0');
    s.insert(s.size() - digits, ".");
  }
  return negative ? "-" + s : s;
}

std::string repeating_decimal(const Rational& r) {
  cpp_int num = boost::multiprecision::numerator(r);
  const cpp_int den = boost::multiprecision::denominator(r);
  const bool negative = num < 0;
  if (negative) num = -num;
  const cpp_int whole = num / den;
  cpp_int rem = num % den;
  std::string out = negative ? "-" : "";
  if (whole != 0) out += whole.str();
  if (rem == 0) return whole == 0 ? "0" : out;
  std::string digits;
  std::map<cpp_int, std::size_t> seen;
  while (rem != 0 && !seen.contains(rem)) {
    seen[rem] = digits.size();
    rem *= 10;
    digits += static_cast<char>('0' + static_cast<int>(rem / den));
    rem %= den;
  }
  out += ".";
  if (rem == 0) return out + digits;
  const std::size_t start = seen[rem];
  out += digits.substr(0, start);
  for (std::size_t i = start; i < digits.size(); ++i) {
    out += digits[i];
    out += "\u0304";
  }
  return out;
}

std::string XReal::pretty() const {
  const std::string canonical = str();
  if (!is_finite() || canonical.find('/') == std::string::npos) return canonical;
  return canonical + " (= " + repeating_decimal(value_) + ")";
}

bool within(const XReal& a, const XReal& b, const Rational& tol) {
  if (!a.is_finite() || !b.is_finite()) return a == b;
  Rational diff = a.finite() - b.finite();
  if (diff < 0) diff = -diff;
  return diff <= tol;
}

Profile operator+(const Profile& a, const Profile& b) {
  Profile out = a;
  for (const auto& [k, x] : b) {
    auto it = out.find(k);
    if (it == out.end()) {
      out.emplace(k, x);
    } else {
      it->second = it->second + x;
    }
  }
  return out;
}

Profile scaled(const Profile& a, const Rational& factor) {
  Profile out;
  for (const auto& [k, x] : a) out.emplace(k, x.scaled(factor));
  return out;
}

bool within(const Profile& a, const Profile& b, const Rational& tol) {
  if (a.size() != b.size()) return false;
  for (const auto& [k, x] : a) {
    auto it = b.find(k);
    if (it == b.end() || !within(x, it->second, tol)) return false;
  }
  return true;
}

Profile zero_profile(const LabelSet& stakeholders) {
  Profile out;
  for (const auto& k : stakeholders) out.emplace(k, XReal(0));
  return out;
}

std::string show(const Profile& p, bool pretty) {
  std::string out = "(";
  bool first = true;
  for (const auto& [k, x] : p) {
    if (!first) out += ", ";
    out += k + ": " + (pretty ? x.pretty() : x.str());
    first = false;
  }
  return out + ")";
}

}  // namespace pentaform
