#include "linklab/laurent.hpp"

#include <stdexcept>

namespace linklab {

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.coeffs_[exponent] = coeff;
  return p;
}

void LaurentPoly::set(int exponent, std::int64_t value) {
  if (value == 0)
    coeffs_.erase(exponent);
  else
    coeffs_[exponent] = value;
}

int LaurentPoly::lowest_exponent() const {
  if (zero()) throw std::logic_error("zero polynomial has no exponents");
  return coeffs_.begin()->first;
}

int LaurentPoly::highest_exponent() const {
  if (zero()) throw std::logic_error("zero polynomial has no exponents");
  return coeffs_.rbegin()->first;
}

std::int64_t LaurentPoly::coeff(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? 0 : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : other.coeffs_) r.set(e, r.coeff(e) + c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : other.coeffs_) r.set(e, r.coeff(e) - c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  LaurentPoly r;
  for (const auto& [ea, ca] : coeffs_)
    for (const auto& [eb, cb] : other.coeffs_) r.set(ea + eb, r.coeff(ea + eb) + ca * cb);
  return r;
}

LaurentPoly LaurentPoly::negated() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
  return r;
}

std::int64_t LaurentPoly::evaluate(std::int64_t t) const {
  std::int64_t total = 0;
  for (const auto& [e, c] : coeffs_) {
    if (e < 0 && (t == 0 || (t != 1 && t != -1)))
      throw std::invalid_argument("cannot evaluate negative exponents at this point");
    std::int64_t power = 1;
    int n = e < 0 ? -e : e;
    for (int i = 0; i < n; ++i) power *= t;
    if (e < 0) power = (power == 1 || power == -1) ? power : 0;  // t in {1,-1} here
    total += c * power;
  }
  return total;
}

LaurentPoly LaurentPoly::with_inverted_variable() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
  return r;
}

LaurentPoly LaurentPoly::normalized() const {
  if (zero()) return *this;
  const int shift = -lowest_exponent();
  const std::int64_t lead = coeffs_.rbegin()->second;
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e + shift] = lead < 0 ? -c : c;
  return r;
}

bool LaurentPoly::equals_up_to_units(const LaurentPoly& other) const {
  return normalized() == other.normalized();
}

std::string LaurentPoly::to_string() const {
  if (zero()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto [e, c] = *it;
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    const bool need_coeff = mag != 1 || e == 0;
    if (need_coeff) out += std::to_string(mag);
    if (e != 0) {
      if (need_coeff) out += "*";
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace linklab
