#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace otl {

using BigInt = boost::multiprecision::cpp_int;

// Laurent polynomial in one variable with big-integer coefficients. Dense storage from the
// lowest exponent; no leading or trailing zero coefficients; zero is the empty polynomial.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(BigInt c, int exponent = 0);
  static LaurentPoly monomial(BigInt c, int exponent) { return LaurentPoly(std::move(c), exponent); }
  static LaurentPoly from_coefficients(int low, std::vector<BigInt> coeffs);

  bool is_zero() const { return c_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  BigInt coeff(int e) const;
  const std::vector<BigInt>& coefficients() const { return c_; }
  int term_count() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.low_ == b.low_ && a.c_ == b.c_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  // Multiply by var^k.
  LaurentPoly shifted(int k) const;
  LaurentPoly pow(int n) const;
  // Substitute var -> var^k (k may be negative).
  LaurentPoly substitute_power(int k) const;
  // Exact division; throws if the divisor does not divide.
  LaurentPoly divided_by(const LaurentPoly& d) const;

  std::string to_string(const std::string& var = "A") const;
  nlohmann::json to_json(const std::string& var = "A") const;

 private:
  void trim();
  int low_ = 0;
  std::vector<BigInt> c_;
};

}  // namespace otl
