#include "braidcalc/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "braidcalc/error.hpp"

namespace braidcalc {

namespace {

using Coefficient = LaurentPoly::Coefficient;

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "Laurent coefficient overflow");
  return out;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "Laurent coefficient overflow");
  return out;
}

std::string decimal(Coefficient magnitude) {
  std::string digits;
  do {
    digits.push_back(static_cast<char>('0' + static_cast<int>(magnitude % 10)));
    magnitude /= 10;
  } while (magnitude != 0);
  return {digits.rbegin(), digits.rend()};
}

std::string format_terms(const std::vector<std::pair<int, Coefficient>>& terms,
                         std::string_view variable, bool halves) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exponent, coefficient] : terms) {
    Coefficient magnitude = coefficient < 0 ? -coefficient : coefficient;
    if (first) {
      if (coefficient < 0) out += '-';
    } else {
      out += coefficient < 0 ? " - " : " + ";
    }
    first = false;
    if (exponent == 0) {
      out += decimal(magnitude);
      continue;
    }
    if (magnitude != 1) out += decimal(magnitude);
    out += variable;
    if (halves) {
      if (exponent % 2 == 0) {
        if (exponent != 2) out += "^" + std::to_string(exponent / 2);
      } else {
        out += "^(" + std::to_string(exponent) + "/2)";
      }
    } else if (exponent != 1) {
      out += "^" + std::to_string(exponent);
    }
  }
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(Coefficient constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly LaurentPoly::monomial(Coefficient coefficient, int exponent) {
  LaurentPoly p;
  if (coefficient != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(coefficient);
  }
  return p;
}

LaurentPoly::Coefficient LaurentPoly::coefficient(int exponent) const noexcept {
  if (coeffs_.empty() || exponent < low_ || exponent > max_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<int, LaurentPoly::Coefficient>> LaurentPoly::terms() const {
  std::vector<std::pair<int, Coefficient>> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) out.emplace_back(low_ + static_cast<int>(k), coeffs_[k]);
  }
  return out;
}

void LaurentPoly::trim() {
  const auto nonzero = [](Coefficient c) { return c != 0; };
  coeffs_.erase(std::find_if(coeffs_.rbegin(), coeffs_.rend(), nonzero).base(), coeffs_.end());
  if (coeffs_.empty()) {
    low_ = 0;
    return;
  }
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), nonzero);
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
}

void LaurentPoly::add_scaled(const LaurentPoly& other, Coefficient coefficient, int exponent) {
  if (other.is_zero() || coefficient == 0) return;
  int other_low = other.low_ + exponent;
  int other_high = other.max_exponent() + exponent;
  if (is_zero()) {
    low_ = other_low;
    coeffs_.assign(other.coeffs_.size(), 0);
  } else if (other_low < low_ || other_high > max_exponent()) {
    int new_low = std::min(low_, other_low);
    int new_high = std::max(max_exponent(), other_high);
    std::vector<Coefficient> grown(static_cast<std::size_t>(new_high - new_low + 1), 0);
    std::copy(coeffs_.begin(), coeffs_.end(), grown.begin() + (low_ - new_low));
    coeffs_ = std::move(grown);
    low_ = new_low;
  }
  auto offset = static_cast<std::size_t>(other_low - low_);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
    coeffs_[offset + k] = checked_add(coeffs_[offset + k], checked_mul(other.coeffs_[k], coefficient));
  }
  trim();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  add_scaled(other, 1, 0);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  add_scaled(other, -1, 0);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.low_ = a.low_ + b.low_;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out.coeffs_[i + j] = checked_add(out.coeffs_[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  out.trim();
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& c : out.coeffs_) c = checked_mul(c, -1);
  return out;
}

LaurentPoly LaurentPoly::substitute_power(int factor) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms()) out.add_scaled(LaurentPoly(c), 1, e * factor);
  return out;
}

LaurentPoly LaurentPoly::divide_exponents(int divisor) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms()) {
    if (e % divisor != 0) {
      throw Error(ErrorCode::Precondition,
                  "exponent " + std::to_string(e) + " is not divisible by " + std::to_string(divisor));
    }
    out.add_scaled(LaurentPoly(c), 1, e / divisor);
  }
  return out;
}

LaurentPoly LaurentPoly::pow(int exponent) const {
  LaurentPoly out(1);
  for (int k = 0; k < exponent; ++k) out *= *this;
  return out;
}

std::string LaurentPoly::to_string(std::string_view variable) const {
  return format_terms(terms(), variable, false);
}

std::string LaurentPoly::to_string_half(std::string_view variable) const {
  return format_terms(terms(), variable, true);
}

// Accepts exactly what to_string prints (plus optional extra spaces).
LaurentPoly LaurentPoly::parse(std::string_view text, std::string_view variable) {
  LaurentPoly out;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> Coefficient {
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start])))) {
      throw ParseError(0, "expected integer in polynomial '" + std::string(text) + "'");
    }
    Coefficient value = 0;
    for (std::size_t k = start; k < pos; ++k) {
      if (text[k] == '-' || text[k] == '+') continue;
      try {
        value = checked_add(checked_mul(value, 10), text[k] - '0');
      } catch (const Error&) {
        throw ParseError(0, "integer too large in polynomial '" + std::string(text) + "'");
      }
    }
    return text[start] == '-' ? -value : value;
  };
  skip_space();
  if (text.substr(pos) == "0") return out;
  int sign = 1;
  bool first = true;
  while (true) {
    skip_space();
    if (pos >= text.size()) break;
    if (!first || text[pos] == '-') {
      if (text[pos] == '-') sign = -1;
      else if (text[pos] == '+') sign = 1;
      else throw ParseError(0, "expected '+' or '-' in polynomial");
      ++pos;
      skip_space();
    }
    first = false;
    Coefficient magnitude = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) magnitude = read_int();
    int exponent = 0;
    if (text.substr(pos, variable.size()) == variable) {
      pos += variable.size();
      exponent = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        const Coefficient e = read_int();
        if (e < -1000000 || e > 1000000) throw ParseError(0, "exponent out of range in polynomial");
        exponent = static_cast<int>(e);
      }
    }
    out.add_scaled(LaurentPoly(sign * magnitude), 1, exponent);
  }
  return out;
}

}  // namespace braidcalc
