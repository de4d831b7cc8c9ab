#include "dobinski/polynomial.hpp"

#include <algorithm>

namespace dobinski {

UniPolynomial::UniPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

UniPolynomial UniPolynomial::constant(Rational c) { return UniPolynomial({std::move(c)}); }

UniPolynomial UniPolynomial::monomial(Rational c, std::size_t power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = std::move(c);
  return UniPolynomial(std::move(coeffs));
}

Rational UniPolynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

UniPolynomial UniPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * i;
  return UniPolynomial(std::move(out));
}

UniPolynomial& UniPolynomial::operator+=(const UniPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UniPolynomial& UniPolynomial::operator-=(const UniPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

UniPolynomial& UniPolynomial::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

UniPolynomial operator*(const UniPolynomial& a, const UniPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPolynomial(std::move(out));
}

std::string UniPolynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == 1 && i > 0;
    if (!unit) out += dobinski::to_string(mag);
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

void UniPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace dobinski
