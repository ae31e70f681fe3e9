#pragma once

// Finite groups given by explicit multiplication tables, and the structural
// queries run against them.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace prdim {

using Index = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 4096;
inline constexpr std::size_t kExhaustiveAssociativityLimit = 512;
inline constexpr std::size_t kAssociativitySamples = 10000;
inline constexpr std::size_t kIsoclinismGuard = 64;

// Immutable group on {0, ..., n-1}. Construction verifies the Latin-square
// property, a two-sided identity, and associativity (exhaustive up to
// kExhaustiveAssociativityLimit elements, seeded sampling above).
// Copies share the underlying tables.
class GroupTable {
 public:
  GroupTable(std::vector<Index> mult, std::vector<std::string> labels = {}, std::uint64_t seed = 0,
             std::size_t order_cap = kDefaultOrderCap);

  std::size_t order() const { return data_->n; }
  Index identity() const { return data_->identity; }

  Index mul(Index a, Index b) const { return data_->mult[std::size_t{a} * data_->n + b]; }
  Index inv(Index a) const { return data_->inv[a]; }
  Index pow(Index a, std::uint64_t k) const;
  Index conjugate(Index g, Index h) const { return mul(inv(h), mul(g, h)); }  // h^-1 g h
  Index commutator(Index a, Index b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  std::uint64_t element_order(Index a) const;

  std::string label(Index a) const;
  bool has_labels() const { return !data_->labels.empty(); }

  std::span<const Index> mult_table() const { return data_->mult; }

 private:
  struct Data {
    std::size_t n = 0;
    Index identity = 0;
    std::vector<Index> mult;
    std::vector<Index> inv;
    std::vector<std::string> labels;
  };
  std::shared_ptr<const Data> data_;
};

// Sorted member indices of a subgroup of some parent GroupTable.
struct Subgroup {
  std::vector<Index> members;

  std::size_t order() const { return members.size(); }
  bool contains(Index g) const;
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

bool is_abelian(const GroupTable& G);

// Closure of gens (plus identity) under multiplication.
Subgroup generated_subgroup(const GroupTable& G, std::span<const Index> gens);

bool is_subgroup(const GroupTable& G, const Subgroup& H);
bool is_normal(const GroupTable& G, const Subgroup& H);

Subgroup center(const GroupTable& G);
Subgroup commutator_subgroup(const GroupTable& G);

struct Omega1Result {
  Subgroup subgroup;
  std::size_t rank = 0;
};

// {z in Z(G) : z^p = 1} and r = log_p of its order. |G| must be a power of p.
Omega1Result omega1_of_center(const GroupTable& G, std::uint32_t p);

// Greedy basis of the elementary abelian Omega_1(Z(G)): scan members in
// ascending index, keep those outside the span of the kept ones.
std::vector<Index> omega1_basis(const GroupTable& G, std::uint32_t p);

// Conjugacy classes sorted by minimal member, identity class first. Each
// class is sorted ascending; its first entry is the representative.
std::vector<std::vector<Index>> conjugacy_classes(const GroupTable& G);

// Element (a, b) has index a * |B| + b.
GroupTable direct_product(const GroupTable& A, const GroupTable& B, std::uint64_t seed = 0,
                          std::size_t order_cap = kDefaultOrderCap);

// Order -> number of elements of that order.
std::map<std::uint64_t, std::size_t> order_spectrum(const GroupTable& G);

// G/N on cosets, each coset represented by its minimal member; cosets are
// indexed in ascending order of representative. N must be normal.
struct QuotientGroup {
  GroupTable group;
  std::vector<Index> coset_of;         // element of G -> coset index
  std::vector<Index> representatives;  // coset index -> minimal member
};
QuotientGroup quotient(const GroupTable& G, const Subgroup& N);

// H as a standalone group; element i of the result is H.members[i].
GroupTable subgroup_table(const GroupTable& G, const Subgroup& H);

// Brute-force isoclinism test. Throws SizeGuardError if |G/Z(G)| or |[G,G]|
// exceeds guard for either group.
bool isoclinic(const GroupTable& S, const GroupTable& T, std::size_t guard = kIsoclinismGuard);

namespace detail {
// Some isomorphism A -> B as an index map, if one exists. Backtracks over
// images of a greedy generating set; only meant for the tiny quotients seen
// by isoclinic() and for tests.
std::optional<std::vector<Index>> find_isomorphism(const GroupTable& A, const GroupTable& B);
}  // namespace detail

GroupTable cyclic_group(std::size_t n, std::size_t order_cap = kDefaultOrderCap);

// (Z/p)^n, index = base-p digits with the first coordinate most significant.
GroupTable elementary_abelian(std::uint32_t p, unsigned n, std::size_t order_cap = kDefaultOrderCap);

// Prime p with |G| = p^k for k >= 1; throws DomainError otherwise.
std::uint32_t group_prime(const GroupTable& G);

}  // namespace prdim
