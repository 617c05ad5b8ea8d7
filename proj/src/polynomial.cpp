#include "indpoly/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace indpoly {

Polynomial::Polynomial(std::vector<BigInt> ascending)
    : coeffs_(std::move(ascending)) {
  for (const BigInt& c : coeffs_) {
    if (c < 0) throw std::invalid_argument("negative polynomial coefficient");
  }
  normalize();
}

Polynomial Polynomial::x() {
  std::vector<BigInt> c(2);
  c[1] = 1;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::constant(BigInt value) {
  std::vector<BigInt> c(1);
  c[0] = std::move(value);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::from_descending(std::vector<BigInt> descending) {
  std::reverse(descending.begin(), descending.end());
  return Polynomial(std::move(descending));
}

void Polynomial::normalize() {
  if (coeffs_.empty()) coeffs_.emplace_back(0);
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

std::vector<BigInt> Polynomial::descending() const {
  return {coeffs_.rbegin(), coeffs_.rend()};
}

BigInt Polynomial::evaluate(const BigInt& point) const {
  BigInt acc = coeffs_.back();
  for (std::size_t k = coeffs_.size() - 1; k-- > 0;) {
    acc *= point;
    acc += coeffs_[k];
  }
  return acc;
}

Polynomial Polynomial::shifted_up() const {
  if (is_zero()) return zero();
  std::vector<BigInt> c;
  c.reserve(coeffs_.size() + 1);
  c.emplace_back(0);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    if (!s.empty()) s += " + ";
    if (k == 0) {
      s += c.get_str();
    } else {
      if (c != 1) s += c.get_str();
      s += "x";
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

std::string Polynomial::to_descending_list() const {
  std::string s = "[";
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    s += coeffs_[k].get_str();
    if (k > 0) s += ", ";
  }
  s += "]";
  return s;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const auto& ca = a.ascending();
  const auto& cb = b.ascending();
  std::vector<BigInt> r(std::max(ca.size(), cb.size()));
  for (std::size_t i = 0; i < ca.size(); ++i) r[i] = ca[i];
  for (std::size_t i = 0; i < cb.size(); ++i) r[i] += cb[i];
  return Polynomial(std::move(r));
}

Polynomial mul(const Polynomial& a, const Polynomial& b,
               std::uint64_t* scalar_mul_ops) {
  const auto& ca = a.ascending();
  const auto& cb = b.ascending();
  std::vector<BigInt> r(ca.size() + cb.size() - 1);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    for (std::size_t j = 0; j < cb.size(); ++j) {
      // r[i+j] += ca[i] * cb[j] without a temporary
      mpz_addmul(r[i + j].get_mpz_t(), ca[i].get_mpz_t(), cb[j].get_mpz_t());
    }
  }
  if (scalar_mul_ops != nullptr) {
    *scalar_mul_ops +=
        static_cast<std::uint64_t>(ca.size()) * static_cast<std::uint64_t>(cb.size());
  }
  return Polynomial(std::move(r));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  return mul(a, b, nullptr);
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.to_string();
}

}  // namespace indpoly
