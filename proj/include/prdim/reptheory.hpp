#pragma once

// Exact complex character tables via the modular class-algebra method.
//
// Central characters omega_chi(C) = |C| chi(g_C) / chi(1) are the common
// eigenvectors of the class multiplication matrices. Those are computed over
// F_l for a prime l = 1 (mod exponent) with l > 2 sqrt|G|, degrees are
// recovered from the norm identity, and each value is lifted back to a
// multiset of e-th roots of unity by a discrete Fourier inversion over the
// cyclic group generated by a class representative.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "prdim/cyclotomic.hpp"
#include "prdim/groups.hpp"

namespace prdim {

struct ClassInfo {
  Index representative = 0;
  std::size_t size = 0;
  std::uint64_t element_order = 1;
  std::size_t inverse_class = 0;
};

// chi(g) = sum_j m_j zeta_e^j with m_j >= 0 and sum_j m_j = chi(1), where
// zeta_e corresponds to root() modulo ell().
using Multiplicities = std::vector<std::uint32_t>;

class CharacterTable {
 public:
  CharacterTable(GroupTable group, std::vector<std::vector<Index>> class_members, std::vector<ClassInfo> classes,
                 std::vector<std::size_t> class_of, unsigned exponent, std::uint64_t ell, std::uint64_t root,
                 std::vector<std::vector<Multiplicities>> values);

  const GroupTable& group() const { return group_; }
  std::size_t num_classes() const { return classes_.size(); }
  std::size_t num_irreducibles() const { return values_.size(); }
  const std::vector<ClassInfo>& classes() const { return classes_; }
  const std::vector<Index>& class_members(std::size_t c) const { return class_members_[c]; }
  std::size_t class_of(Index g) const { return class_of_[g]; }

  unsigned exponent() const { return exponent_; }
  std::uint64_t ell() const { return ell_; }
  std::uint64_t root() const { return root_; }

  const Multiplicities& value(std::size_t irr, std::size_t cls) const { return values_[irr][cls]; }
  const Multiplicities& value_at(std::size_t irr, Index g) const { return values_[irr][class_of_[g]]; }
  std::uint32_t degree(std::size_t irr) const;

  CyclotomicInteger cyclotomic_value(std::size_t irr, std::size_t cls) const;

 private:
  GroupTable group_;
  std::vector<std::vector<Index>> class_members_;
  std::vector<ClassInfo> classes_;
  std::vector<std::size_t> class_of_;
  unsigned exponent_;
  std::uint64_t ell_;
  std::uint64_t root_;
  std::vector<std::vector<Multiplicities>> values_;
};

// Exponent of G (lcm of element orders).
unsigned group_exponent(const GroupTable& G);

// Smallest prime l = 1 (mod e) with l > 2 sqrt(order).
std::uint64_t choose_modular_prime(unsigned e, std::size_t order);

// Smallest primitive e-th root of unity modulo the prime l.
std::uint64_t smallest_primitive_root_of_unity(unsigned e, std::uint64_t l);

// Irreducibles are ordered by degree, the trivial character first; ties keep
// the order in which eigenspace splitting produced them. Throws
// VerificationError if the result fails the degree-sum or row orthogonality
// checks.
CharacterTable character_table(const GroupTable& G, std::size_t order_cap = kDefaultOrderCap);

// sum_C |C| chi(C) conj(chi'(C)) == |G| delta for all pairs, exactly.
bool rows_orthogonal(const CharacterTable& t);
// sum_chi chi(C) conj(chi(C')) == |C_G(g_C)| delta for all class pairs, exactly.
bool columns_orthogonal(const CharacterTable& t);

// {g : chi(g) = chi(1)}. Throws VerificationError if the result is not a
// normal subgroup.
Subgroup kernel_of(const CharacterTable& t, std::size_t irr);

struct CentralVector {
  std::size_t irreducible = 0;
  std::vector<std::uint32_t> vector;  // z_i acts by zeta_p^{vector[i]}
  friend bool operator==(const CentralVector&, const CentralVector&) = default;
};

// Restriction of the central character of irr to the subgroup spanned by
// basis (elements of Omega_1(Z(G))), as exponents of zeta_p = zeta_e^{e/p}.
CentralVector central_vector(const CharacterTable& t, std::size_t irr, const std::vector<Index>& basis,
                             std::uint32_t p);

// Degree -> number of irreducibles of that degree.
std::map<std::uint32_t, std::size_t> degree_census(const CharacterTable& t);

}  // namespace prdim
