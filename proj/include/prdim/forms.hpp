#pragma once

// Spaces K of alternating bilinear forms on V = F_p^d, the induced map
// omega_K : V x V -> K*, symplectic subspace construction, and bilinear maps
// beta with beta(v,w) - beta(w,v) = omega_K(v,w).

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "prdim/ffield.hpp"

namespace prdim {

using FpVector = std::vector<std::uint32_t>;

inline constexpr std::uint64_t kDefaultExhaustiveCap = 100000;

// k linearly independent alternating d x d generator matrices over F_p.
// Coordinates in K* are taken in the basis dual to the generators.
class FormSpace {
 public:
  FormSpace(std::uint32_t p, std::size_t d, std::vector<FqMatrix> generators);

  std::uint32_t p() const { return p_; }
  std::size_t dim_v() const { return d_; }
  std::size_t dim_k() const { return generators_.size(); }
  const std::vector<FqMatrix>& generators() const { return generators_; }

  // Sum_i coeffs[i] * generator_i.
  FqMatrix combination(std::span<const std::uint32_t> coeffs) const;

 private:
  std::uint32_t p_;
  std::size_t d_;
  std::vector<FqMatrix> generators_;
};

// True iff m is square with zero diagonal and m^T = -m.
bool is_alternating(const FqMatrix& m);

// (v^T M_1 w, ..., v^T M_k w).
FpVector omega_eval(const FormSpace& K, std::span<const std::uint32_t> v, std::span<const std::uint32_t> w);

// Number of nonzero c in F_p^k with det(sum c_i M_i) = 0. Zero iff K is symplectic.
std::uint64_t degenerate_census(const FormSpace& K, std::uint64_t cap = kDefaultExhaustiveCap);

inline bool is_symplectic(const FormSpace& K, std::uint64_t cap = kDefaultExhaustiveCap) {
  return degenerate_census(K, cap) == 0;
}

// m-dimensional symplectic subspace of A(F_p^{2m}) from the regular
// representation of F_{p^m}: generators [[0, W_i], [-W_i^T, 0]].
FormSpace build_symplectic(std::uint32_t p, unsigned m);

// k-dimensional symplectic subspace of A(F_p^d): the first k generators of
// build_symplectic(p, d/2). Requires d even and 1 <= k <= d/2.
FormSpace symplectic_subspace(std::uint32_t p, std::size_t d, std::size_t k);

// Bilinear map V x V -> K*, stored as the table beta(e_i, e_j) in F_p^k.
class BilinearMap {
 public:
  // Validates beta(e_i,e_j) - beta(e_j,e_i) = omega_K(e_i,e_j) on all basis pairs.
  BilinearMap(const FormSpace& K, std::vector<FpVector> table);

  std::uint32_t p() const { return p_; }
  std::size_t dim_v() const { return d_; }
  std::size_t dim_k() const { return k_; }

  const FpVector& at(std::size_t i, std::size_t j) const { return table_[i * d_ + j]; }
  const std::vector<FpVector>& table() const { return table_; }

  FpVector operator()(std::span<const std::uint32_t> v, std::span<const std::uint32_t> w) const;

  friend bool operator==(const BilinearMap&, const BilinearMap&) = default;

 private:
  std::uint32_t p_;
  std::size_t d_;
  std::size_t k_;
  std::vector<FpVector> table_;
};

// beta(e_i, e_j) = omega_K(e_i, e_j) for i > j, zero otherwise.
BilinearMap default_beta(const FormSpace& K);

// beta = omega_K / 2, defined for odd p only.
BilinearMap half_omega_beta(const FormSpace& K);

// beta + S for a symmetric table S; the result still satisfies the
// decomposition identity.
BilinearMap add_symmetric(const FormSpace& K, const BilinearMap& beta, const std::vector<FpVector>& symmetric);

// Text format: first line "p d k", then k blocks of d lines with d
// space-separated integers in [0, p). Blank lines and '#' comments are ignored.
FormSpace parse_form_space(std::istream& in);

// d lines of d entries; each entry is a k-character digit string (0-9 then
// a-z for digits >= 10) giving the coordinates of beta(e_i, e_j).
BilinearMap parse_beta(std::istream& in, const FormSpace& K);

void write_form_space(std::ostream& out, const FormSpace& K);
void write_beta(std::ostream& out, const BilinearMap& beta);

}  // namespace prdim
