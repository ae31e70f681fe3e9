#pragma once

// Minimal dimension of a faithful complex representation of a p-group, and
// the bound functions it is compared against.
//
// A representation of a p-group G is faithful iff it is faithful on
// Omega_1(Z(G)), i.e. iff the central characters of its irreducible summands
// restricted to Omega_1(Z(G)) span the dual of that F_p-space. The minimum
// is therefore a minimum-weight basis of the linear matroid of central
// vectors, weighted by degree, and the greedy scan is exact.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prdim/groups.hpp"
#include "prdim/reptheory.hpp"

namespace prdim {

inline constexpr std::uint64_t kBruteForceGuard = 1000000;

// max_r r p^{floor((n-r)/2)}, in closed form.
std::uint64_t f_p(unsigned n, std::uint32_t p);

// r p^{floor((n-r)/2)} for 1 <= r <= n.
std::uint64_t rdim_upper_bound(unsigned n, unsigned r, std::uint32_t p);

// 1 + (r-1) floor(sqrt([G:Z(G)])) when Omega_1(Z(G)) is not contained in
// [G,G]; empty otherwise.
std::optional<std::uint64_t> center_index_bound(const GroupTable& G, std::uint32_t p);

enum class RdimMethod { greedy, brute_force };

std::string to_string(RdimMethod m);

struct RdimResult {
  std::uint64_t value = 0;
  std::vector<std::size_t> witness;  // irreducible indices
  std::vector<std::uint32_t> witness_degrees;
  std::vector<CentralVector> central_vectors;
  RdimMethod method = RdimMethod::greedy;
};

// Irreducibles sorted by (degree, index); keep one iff it raises the F_p-rank
// of the kept central vectors. The kernel intersection of the witness is
// verified to be trivial; a failure throws VerificationError.
RdimResult min_faithful_dim(const GroupTable& G, std::uint32_t p, const CharacterTable& table);

// Exhaustive minimum over all r-subsets of irreducibles with independent
// central vectors. Throws SizeGuardError if C(#irreducibles, r) > guard.
RdimResult min_faithful_dim_bruteforce(const GroupTable& G, std::uint32_t p, const CharacterTable& table,
                                       std::uint64_t guard = kBruteForceGuard);

// Rank over F_p of a set of vectors of equal length.
std::size_t fp_rank(const std::vector<std::vector<std::uint32_t>>& vectors, std::uint32_t p);

}  // namespace prdim
