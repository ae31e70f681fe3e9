#include "prdim/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "prdim/errors.hpp"

namespace prdim {

namespace {

// a / b for monic b with exact integer quotient.
std::vector<std::int64_t> exact_divide(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<std::int64_t> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t c = a[i];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (a[i] != 0) throw VerificationError("cyclotomic_polynomial: inexact division");
  }
  return q;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(unsigned e) {
  if (e == 0) throw DomainError("cyclotomic_polynomial: order must be positive");
  static std::mutex mu;
  static std::map<unsigned, std::vector<std::int64_t>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(e); it != cache.end()) return it->second;
  }
  // x^e - 1 = prod_{d | e} Phi_d
  std::vector<std::int64_t> poly(e + 1, 0);
  poly[0] = -1;
  poly[e] = 1;
  for (unsigned d = 1; d < e; ++d) {
    if (e % d == 0) poly = exact_divide(poly, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mu);
  cache.emplace(e, poly);
  return poly;
}

CyclotomicInteger::CyclotomicInteger(unsigned e) : e_(e), coeffs_(e, 0) {
  if (e == 0) throw DomainError("CyclotomicInteger: order must be positive");
}

CyclotomicInteger::CyclotomicInteger(unsigned e, std::vector<std::int64_t> coeffs)
    : e_(e), coeffs_(std::move(coeffs)) {
  if (e == 0 || coeffs_.size() != e) throw DimensionError("CyclotomicInteger: need exactly e coefficients");
}

CyclotomicInteger CyclotomicInteger::constant(unsigned e, std::int64_t c) {
  CyclotomicInteger x(e);
  x.coeffs_[0] = c;
  return x;
}

CyclotomicInteger& CyclotomicInteger::operator+=(const CyclotomicInteger& o) {
  if (o.e_ != e_) throw DimensionError("CyclotomicInteger: mismatched orders");
  for (unsigned j = 0; j < e_; ++j) coeffs_[j] += o.coeffs_[j];
  return *this;
}

CyclotomicInteger CyclotomicInteger::operator+(const CyclotomicInteger& o) const {
  CyclotomicInteger out = *this;
  out += o;
  return out;
}

CyclotomicInteger CyclotomicInteger::operator-(const CyclotomicInteger& o) const { return *this + o.scaled(-1); }

CyclotomicInteger CyclotomicInteger::scaled(std::int64_t c) const {
  CyclotomicInteger out = *this;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

CyclotomicInteger CyclotomicInteger::operator*(const CyclotomicInteger& o) const {
  if (o.e_ != e_) throw DimensionError("CyclotomicInteger: mismatched orders");
  CyclotomicInteger out(e_);
  for (unsigned i = 0; i < e_; ++i) {
    if (coeffs_[i] == 0) continue;
    for (unsigned j = 0; j < e_; ++j) {
      if (o.coeffs_[j] == 0) continue;
      out.coeffs_[(i + j) % e_] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return out;
}

CyclotomicInteger CyclotomicInteger::conj() const {
  CyclotomicInteger out(e_);
  for (unsigned j = 0; j < e_; ++j) out.coeffs_[(e_ - j) % e_] = coeffs_[j];
  return out;
}

std::vector<std::int64_t> CyclotomicInteger::reduced() const {
  const auto phi = cyclotomic_polynomial(e_);
  const std::size_t deg = phi.size() - 1;
  std::vector<std::int64_t> a = coeffs_;
  for (std::size_t i = a.size(); i-- > deg;) {
    const std::int64_t c = a[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) a[i - deg + j] -= c * phi[j];
  }
  a.resize(deg);
  return a;
}

bool CyclotomicInteger::is_zero() const {
  const auto r = reduced();
  return std::all_of(r.begin(), r.end(), [](std::int64_t c) { return c == 0; });
}

}  // namespace prdim
