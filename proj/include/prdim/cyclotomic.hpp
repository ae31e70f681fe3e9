#pragma once

// Exact arithmetic in Z[zeta_e], with elements written as integer
// combinations sum_j c_j zeta_e^j (j mod e). Representations are not unique;
// equality is decided after reduction modulo the e-th cyclotomic polynomial.

#include <cstdint>
#include <vector>

namespace prdim {

// Coefficients of Phi_e, lowest degree first.
std::vector<std::int64_t> cyclotomic_polynomial(unsigned e);

class CyclotomicInteger {
 public:
  explicit CyclotomicInteger(unsigned e);
  CyclotomicInteger(unsigned e, std::vector<std::int64_t> coeffs);

  static CyclotomicInteger constant(unsigned e, std::int64_t c);

  unsigned order() const { return e_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  CyclotomicInteger operator+(const CyclotomicInteger& o) const;
  CyclotomicInteger operator-(const CyclotomicInteger& o) const;
  CyclotomicInteger operator*(const CyclotomicInteger& o) const;
  CyclotomicInteger& operator+=(const CyclotomicInteger& o);
  CyclotomicInteger scaled(std::int64_t c) const;

  // Complex conjugate: zeta^j -> zeta^{-j}.
  CyclotomicInteger conj() const;

  // Remainder modulo Phi_e (length phi(e)).
  std::vector<std::int64_t> reduced() const;
  bool is_zero() const;
  bool equals(const CyclotomicInteger& o) const { return (*this - o).is_zero(); }

 private:
  unsigned e_;
  std::vector<std::int64_t> coeffs_;
};

}  // namespace prdim
