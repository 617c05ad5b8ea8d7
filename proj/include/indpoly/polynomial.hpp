#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace indpoly {

using BigInt = mpz_class;

// Dense univariate polynomial with arbitrary-precision non-negative integer
// coefficients. Coefficients are stored in ascending degree order, so
// coefficient(k) is the number of independent sets of cardinality k when the
// value represents an independence polynomial. The coefficient vector is
// never empty and carries no trailing zeros (except for the single zero of
// the zero polynomial). Values are immutable; every operation returns a new
// polynomial.
class Polynomial {
public:
  // Zero polynomial.
  Polynomial() : coeffs_(1, BigInt(0)) {}

  // From ascending-degree coefficients. Trailing zeros are stripped; negative
  // coefficients are rejected (the domain is set counts).
  explicit Polynomial(std::vector<BigInt> ascending);

  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return constant(1); }
  static Polynomial x();
  static Polynomial constant(BigInt value);
  static Polynomial from_descending(std::vector<BigInt> descending);

  std::size_t size() const noexcept { return coeffs_.size(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 0; }

  // Coefficient of x^k; zero beyond the degree.
  BigInt coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
  }
  const BigInt& leading() const noexcept { return coeffs_.back(); }
  const std::vector<BigInt>& ascending() const noexcept { return coeffs_; }
  std::vector<BigInt> descending() const;

  // Exact Horner evaluation; the point may be negative.
  BigInt evaluate(const BigInt& point) const;

  // Multiplication by the monomial x.
  Polynomial shifted_up() const;

  // Human-readable descending rendering, e.g. "x^2 + 3x + 1".
  std::string to_string() const;

  // Descending coefficient list rendering, e.g. "[1, 3, 1]".
  std::string to_descending_list() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

// Schoolbook product. When scalar_mul_ops is non-null it is incremented by
// the number of coefficient-pair multiplications performed (|a| * |b|).
Polynomial mul(const Polynomial& a, const Polynomial& b,
               std::uint64_t* scalar_mul_ops);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace indpoly
