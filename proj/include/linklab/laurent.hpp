#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace linklab {

// Integer Laurent polynomial in one variable t.  Zero coefficients are never
// stored.  Two polynomials are "equal up to units" when they agree after
// multiplication by some +/- t^k; normalized() picks the representative with
// lowest exponent 0 and positive leading coefficient.
class LaurentPoly {
public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::int64_t constant) {
    if (constant != 0) coeffs_[0] = constant;
  }
  static LaurentPoly monomial(std::int64_t coeff, int exponent);

  bool zero() const { return coeffs_.empty(); }
  int lowest_exponent() const;
  int highest_exponent() const;
  std::int64_t coeff(int exponent) const;
  const std::map<int, std::int64_t>& coefficients() const { return coeffs_; }

  LaurentPoly operator+(const LaurentPoly& other) const;
  LaurentPoly operator-(const LaurentPoly& other) const;
  LaurentPoly operator*(const LaurentPoly& other) const;
  LaurentPoly negated() const;

  std::int64_t evaluate(std::int64_t t) const;  // t != 0 for negative exponents
  LaurentPoly with_inverted_variable() const;   // t -> t^-1

  LaurentPoly normalized() const;
  bool equals_up_to_units(const LaurentPoly& other) const;

  // Human-readable form, e.g. "t^2 - t + 1"; used verbatim in CLI output.
  std::string to_string() const;

  bool operator==(const LaurentPoly& other) const = default;

private:
  std::map<int, std::int64_t> coeffs_;
  void set(int exponent, std::int64_t value);
};

}  // namespace linklab
