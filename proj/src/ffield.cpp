#include "prdim/ffield.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "prdim/errors.hpp"

namespace prdim {

// ---------------------------------------------------------------------------
// modular helpers

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  std::uint64_t result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1U;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw DomainError("inv_mod: zero has no inverse");
  return pow_mod(a, p - 2, p);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

int p_power_exponent(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || p < 2) return -1;
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return n == 1 ? k : -1;
}

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  if (n <= 1) return 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return d;
  }
  return n;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

std::uint64_t isqrt(std::uint64_t n) {
  std::uint64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// ---------------------------------------------------------------------------
// PrimeFieldElement

void check_field_prime(std::uint32_t p) {
  if (!is_prime(p)) throw DomainError("field modulus " + std::to_string(p) + " is not prime");
  if (p > kMaxPrime) {
    throw SizeGuardError("field modulus " + std::to_string(p) + " exceeds cap " + std::to_string(kMaxPrime));
  }
}

namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

}  // namespace

PrimeFieldElement::PrimeFieldElement(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
  check_field_prime(modulus);
  value_ = reduce(value, modulus);
}

PrimeFieldElement PrimeFieldElement::operator+(const PrimeFieldElement& o) const {
  if (o.modulus_ != modulus_) throw DimensionError("mixed moduli");
  return {static_cast<std::int64_t>(value_) + o.value_, modulus_};
}

PrimeFieldElement PrimeFieldElement::operator-(const PrimeFieldElement& o) const {
  if (o.modulus_ != modulus_) throw DimensionError("mixed moduli");
  return {static_cast<std::int64_t>(value_) - o.value_, modulus_};
}

PrimeFieldElement PrimeFieldElement::operator*(const PrimeFieldElement& o) const {
  if (o.modulus_ != modulus_) throw DimensionError("mixed moduli");
  return {static_cast<std::int64_t>(value_) * o.value_, modulus_};
}

PrimeFieldElement PrimeFieldElement::operator-() const { return {-static_cast<std::int64_t>(value_), modulus_}; }

PrimeFieldElement PrimeFieldElement::inverse() const {
  return {static_cast<std::int64_t>(inv_mod(value_, modulus_)), modulus_};
}

// ---------------------------------------------------------------------------
// FqMatrix

FqMatrix::FqMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), entries_(rows * cols, 0) {
  check_field_prime(p);
}

FqMatrix::FqMatrix(std::uint32_t p, std::size_t rows, std::size_t cols, std::span<const std::int64_t> entries)
    : FqMatrix(p, rows, cols) {
  if (entries.size() != rows * cols) {
    throw DimensionError("FqMatrix: expected " + std::to_string(rows * cols) + " entries, got " +
                         std::to_string(entries.size()));
  }
  std::transform(entries.begin(), entries.end(), entries_.begin(), [p](std::int64_t v) { return reduce(v, p); });
}

FqMatrix::FqMatrix(std::uint32_t p, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : FqMatrix(p, rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("FqMatrix: ragged initializer");
    std::size_t c = 0;
    for (std::int64_t v : row) set(r, c++, v);
    ++r;
  }
}

FqMatrix FqMatrix::identity(std::uint32_t p, std::size_t n) {
  FqMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void FqMatrix::set(std::size_t r, std::size_t c, std::int64_t value) { entries_[r * cols_ + c] = reduce(value, p_); }

FqMatrix FqMatrix::transpose() const {
  FqMatrix t(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = (*this)(r, c);
  return t;
}

FqMatrix FqMatrix::scaled(std::uint32_t c) const {
  FqMatrix out = *this;
  for (auto& e : out.entries_) e = static_cast<std::uint32_t>(std::uint64_t{e} * c % p_);
  return out;
}

FqMatrix FqMatrix::operator+(const FqMatrix& o) const {
  if (o.p_ != p_ || o.rows_ != rows_ || o.cols_ != cols_) throw DimensionError("FqMatrix +: shape mismatch");
  FqMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = (entries_[i] + o.entries_[i]) % p_;
  return out;
}

FqMatrix FqMatrix::operator-() const {
  FqMatrix out = *this;
  for (auto& e : out.entries_) e = (p_ - e) % p_;
  return out;
}

FqMatrix FqMatrix::operator-(const FqMatrix& o) const { return *this + (-o); }

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
  if (o.p_ != p_ || cols_ != o.rows_) throw DimensionError("FqMatrix *: shape mismatch");
  FqMatrix out(p_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < o.cols_; ++c) {
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i < cols_; ++i) acc += std::uint64_t{(*this)(r, i)} * o(i, c);
      out.entries_[r * o.cols_ + c] = static_cast<std::uint32_t>(acc % p_);
    }
  }
  return out;
}

bool FqMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](std::uint32_t e) { return e == 0; });
}

std::ostream& operator<<(std::ostream& os, const FqMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << '\n';
  }
  return os;
}

namespace {

// In-place row reduction; returns the rank and accumulates the determinant
// factor (sign of swaps times pivots) into det when non-null.
std::size_t eliminate(std::vector<std::uint32_t>& a, std::size_t rows, std::size_t cols, std::uint32_t p,
                      std::uint64_t* det) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(a[pivot * cols + c], a[rank * cols + c]);
      if (det) *det = (p - *det) % p;
    }
    const std::uint64_t pv = a[rank * cols + col];
    if (det) *det = *det * pv % p;
    const std::uint64_t inv = inv_mod(pv, p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::uint64_t f = a[r * cols + col] * inv % p;
      if (f == 0) continue;
      for (std::size_t c = col; c < cols; ++c) {
        a[r * cols + c] = static_cast<std::uint32_t>((a[r * cols + c] + (p - f) * a[rank * cols + c]) % p);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

PrimeFieldElement det(const FqMatrix& m) {
  if (!m.is_square()) throw DimensionError("det: matrix is not square");
  auto a = m.entries();
  std::uint64_t d = 1;
  const std::size_t r = eliminate(a, m.rows(), m.cols(), m.modulus(), &d);
  if (r < m.rows()) d = 0;
  return {static_cast<std::int64_t>(d), m.modulus()};
}

std::size_t rank(const FqMatrix& m) {
  auto a = m.entries();
  return eliminate(a, m.rows(), m.cols(), m.modulus(), nullptr);
}

// ---------------------------------------------------------------------------
// polynomials

namespace {

using Poly = std::vector<std::uint32_t>;  // lowest degree first

// Remainder of a modulo the monic polynomial b.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t i = 0; i <= db; ++i) {
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * b[i]) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

}  // namespace

std::string IrreduciblePoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coefficients.size(); i-- > 0;) {
    const auto c = coefficients[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c != 1 || i == 0) os << c;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic_coefficients) {
  check_field_prime(p);
  if (monic_coefficients.size() < 2 || monic_coefficients.back() != 1) {
    throw DomainError("is_irreducible: polynomial must be monic of degree >= 1");
  }
  const Poly f(monic_coefficients.begin(), monic_coefficients.end());
  const unsigned m = static_cast<unsigned>(f.size()) - 1;
  for (unsigned d = 1; 2 * d <= m; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t n = 0; n < count; ++n) {
      Poly g(d + 1, 0);
      std::uint64_t x = n;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      g[d] = 1;
      const Poly r = poly_mod(f, g, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; })) return false;
    }
  }
  return true;
}

IrreduciblePoly find_irreducible(std::uint32_t p, unsigned m, unsigned degree_cap) {
  check_field_prime(p);
  if (m == 0) throw DomainError("find_irreducible: degree must be positive");
  if (m > degree_cap) {
    throw SizeGuardError("find_irreducible: degree " + std::to_string(m) + " exceeds cap " +
                         std::to_string(degree_cap));
  }
  const std::uint64_t count = ipow(p, m);
  for (std::uint64_t n = 0; n < count; ++n) {
    IrreduciblePoly poly{p, Poly(m + 1, 0)};
    std::uint64_t x = n;
    for (unsigned i = 0; i < m; ++i) {
      poly.coefficients[i] = static_cast<std::uint32_t>(x % p);
      x /= p;
    }
    poly.coefficients[m] = 1;
    if (is_irreducible(p, poly.coefficients)) return poly;
  }
  throw VerificationError("find_irreducible: no irreducible polynomial found");
}

std::vector<FqMatrix> regular_embedding(const IrreduciblePoly& poly) {
  const std::uint32_t p = poly.p;
  if (!is_irreducible(p, poly.coefficients)) throw DomainError("regular_embedding: polynomial is reducible");
  const unsigned m = poly.degree();
  const Poly& f = poly.coefficients;
  std::vector<FqMatrix> out;
  out.reserve(m);
  for (unsigned i = 0; i < m; ++i) {
    FqMatrix w(p, m, m);
    for (unsigned j = 0; j < m; ++j) {
      Poly prod(i + j + 1, 0);
      prod[i + j] = 1;
      const Poly r = poly_mod(prod, f, p);
      for (std::size_t row = 0; row < r.size(); ++row) w.set(row, j, r[row]);
    }
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace prdim
