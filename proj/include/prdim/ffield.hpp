#pragma once

// Exact linear algebra over prime fields F_p and degree-m extensions built
// from irreducible polynomials.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "prdim/modular.hpp"

namespace prdim {

inline constexpr std::uint32_t kMaxPrime = 31;
inline constexpr unsigned kMaxExtensionDegree = 6;

// Throws DomainError unless p is a prime no larger than kMaxPrime.
void check_field_prime(std::uint32_t p);

class PrimeFieldElement {
 public:
  PrimeFieldElement(std::int64_t value, std::uint32_t modulus);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  PrimeFieldElement operator+(const PrimeFieldElement& o) const;
  PrimeFieldElement operator-(const PrimeFieldElement& o) const;
  PrimeFieldElement operator*(const PrimeFieldElement& o) const;
  PrimeFieldElement operator-() const;
  PrimeFieldElement inverse() const;

  friend bool operator==(const PrimeFieldElement&, const PrimeFieldElement&) = default;

 private:
  std::uint32_t value_;
  std::uint32_t modulus_;
};

// Dense row-major matrix over F_p. Entries are stored fully reduced.
class FqMatrix {
 public:
  FqMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);
  FqMatrix(std::uint32_t p, std::size_t rows, std::size_t cols, std::span<const std::int64_t> entries);
  FqMatrix(std::uint32_t p, std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static FqMatrix identity(std::uint32_t p, std::size_t n);

  std::uint32_t modulus() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t value);
  const std::vector<std::uint32_t>& entries() const { return entries_; }

  FqMatrix transpose() const;
  FqMatrix scaled(std::uint32_t c) const;
  FqMatrix operator+(const FqMatrix& o) const;
  FqMatrix operator-(const FqMatrix& o) const;
  FqMatrix operator*(const FqMatrix& o) const;
  FqMatrix operator-() const;

  bool is_zero() const;

  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;

 private:
  std::uint32_t p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> entries_;
};

std::ostream& operator<<(std::ostream& os, const FqMatrix& m);

PrimeFieldElement det(const FqMatrix& m);

std::size_t rank(const FqMatrix& m);

// Monic polynomial over F_p, coefficients stored lowest degree first.
struct IrreduciblePoly {
  std::uint32_t p = 2;
  std::vector<std::uint32_t> coefficients;

  unsigned degree() const { return static_cast<unsigned>(coefficients.size()) - 1; }
  std::string to_string() const;
};

// Exhaustive trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic_coefficients);

// Lexicographically smallest monic irreducible of degree m, scanning the
// lower coefficients as a base-p number with the x^{m-1} coefficient most
// significant.
IrreduciblePoly find_irreducible(std::uint32_t p, unsigned m, unsigned degree_cap = kMaxExtensionDegree);

// Matrices of left multiplication by 1, x, ..., x^{m-1} on F_p[x]/(poly)
// in the basis 1, x, ..., x^{m-1}.
std::vector<FqMatrix> regular_embedding(const IrreduciblePoly& poly);

}  // namespace prdim
