#include "otl/laurent.hpp"

#include <algorithm>
#include <limits>

#include "otl/error.hpp"

namespace otl {

LaurentPoly::LaurentPoly(BigInt c, int exponent) : low_(exponent) {
  if (c != 0) c_.push_back(std::move(c));
  else low_ = 0;
}

LaurentPoly LaurentPoly::from_coefficients(int low, std::vector<BigInt> coeffs) {
  LaurentPoly p;
  p.low_ = low;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  if (k) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(k));
    low_ += static_cast<int>(k);
  }
  if (c_.empty()) low_ = 0;
}

BigInt LaurentPoly::coeff(int e) const {
  if (c_.empty() || e < low_ || e > high()) return 0;
  return c_[static_cast<std::size_t>(e - low_)];
}

int LaurentPoly::term_count() const {
  return static_cast<int>(std::count_if(c_.begin(), c_.end(), [](const BigInt& x) { return x != 0; }));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_), hi = std::max(high(), o.high());
  std::vector<BigInt> r(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t k = 0; k < c_.size(); ++k) r[k + static_cast<std::size_t>(low_ - lo)] = c_[k];
  for (std::size_t k = 0; k < o.c_.size(); ++k) r[k + static_cast<std::size_t>(o.low_ - lo)] += o.c_[k];
  low_ = lo;
  c_ = std::move(r);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return LaurentPoly::from_coefficients(a.low_ + b.low_, std::move(r));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::pow(int n) const {
  if (n < 0) throw Error(ErrorKind::OutOfRange, "negative power of a Laurent polynomial");
  LaurentPoly r(1), base = *this;
  while (n) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  if (k == 0) throw Error(ErrorKind::OutOfRange, "substitution by var^0");
  LaurentPoly r;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) r += LaurentPoly(c_[i], (low_ + static_cast<int>(i)) * k);
  return r;
}

LaurentPoly LaurentPoly::divided_by(const LaurentPoly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::OutOfRange, "division by zero polynomial");
  if (is_zero()) return {};
  const BigInt& lead = d.c_.front();
  std::vector<BigInt> rem = c_;
  const std::size_t qn = c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0;
  std::vector<BigInt> q(qn);
  // Eliminate from the lowest degree upward.
  for (std::size_t i = 0; i < qn; ++i) {
    if (rem[i] == 0) continue;
    if (rem[i] % lead != 0) throw Error(ErrorKind::Internal, "inexact polynomial division");
    q[i] = rem[i] / lead;
    for (std::size_t j = 0; j < d.c_.size(); ++j) rem[i + j] -= q[i] * d.c_[j];
  }
  for (const auto& x : rem)
    if (x != 0) throw Error(ErrorKind::Internal, "inexact polynomial division");
  return from_coefficients(low_ - d.low_, std::move(q));
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int e = high(); e >= low_; --e) {
    BigInt c = coeff(e);
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    if (c != 1 || e == 0) out += c.str();
    if (e != 0) {
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

nlohmann::json LaurentPoly::to_json(const std::string& var) const {
  nlohmann::json terms = nlohmann::json::object();
  for (int e = low_; !is_zero() && e <= high(); ++e) {
    const BigInt c = coeff(e);
    if (c == 0) continue;
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
      terms[std::to_string(e)] = static_cast<long long>(c);
    else
      terms[std::to_string(e)] = c.str();
  }
  return nlohmann::json{{var, terms}};
}

}  // namespace otl
