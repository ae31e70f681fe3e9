#pragma once

// Named witness groups, the group-spec expression language, and the
// per-(p, n) maximum reproduction table.
//
// Grammar:
//   expr := heisenberg(p, dimV, dimK [, beta-file])
//         | forms(file)                 generator matrices, optional beta block
//         | elementary(p, n) | cyclic(n)
//         | q8 | d8 | exceptional128
//         | product(expr, expr)

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prdim/forms.hpp"
#include "prdim/groups.hpp"
#include "prdim/heisenberg.hpp"

namespace prdim {

struct GroupSpecExpr {
  enum class Kind { heisenberg, forms, elementary, cyclic, q8, d8, exceptional128, product };

  Kind kind = Kind::cyclic;
  std::vector<std::uint64_t> params;
  std::string path;  // beta file for heisenberg, generator file for forms
  std::vector<GroupSpecExpr> children;

  friend bool operator==(const GroupSpecExpr&, const GroupSpecExpr&) = default;
};

// Throws ConstructionError with the offending position on malformed input.
GroupSpecExpr parse_group_spec(const std::string& text);

std::string to_string(const GroupSpecExpr& expr);

struct BuildOptions {
  std::uint64_t seed = 0;
  std::size_t order_cap = kDefaultOrderCap;
  // Beta table file for the single heisenberg(...) node without a file of its
  // own, or the single forms(...) node whose file has no beta block.
  std::optional<std::string> beta_file;
};

struct BuiltGroup {
  GroupTable group;
  // Set when the group is H(V, K, beta) itself (not a product containing one).
  std::optional<HeisenbergSpec> heisenberg;
};

BuiltGroup build_group(const GroupSpecExpr& expr, const BuildOptions& options = {});
BuiltGroup build_group(const std::string& text, const BuildOptions& options = {});

// The three 4x4 generators over F_2 of the order-128 special group.
FormSpace exceptional128_forms();
HeisenbergSpec exceptional128_spec();
// H(F_2^4, K, default beta).
GroupTable exceptional128(std::uint64_t seed = 0);
// The generator bits packed row-major, 16 bits per matrix, first generator
// most significant.
std::uint64_t exceptional128_checksum();
// default beta plus the symmetric form with S(e_1, e_1) = (1, 0, 0).
BilinearMap exceptional128_alternate_beta();

// Pinned beta tables over F_2 for K = span([[0,1],[1,0]]).
HeisenbergSpec quaternion_spec();
HeisenbergSpec dihedral_spec();

// Largest n accepted by the theorem table for p.
unsigned theorem_n_cap(std::uint32_t p);

GroupSpecExpr witness_for(std::uint32_t p, unsigned n);

// Maximal rdim over groups of order p^n: f_p(n), except 5 at (2,5), 10 at
// (2,7) and p + 1 at (odd p, 4).
std::uint64_t claimed_maximum(std::uint32_t p, unsigned n);

struct TheoremReport {
  std::uint32_t p = 0;
  unsigned n = 0;
  std::uint64_t claimed = 0;
  std::string witness;
  std::uint64_t computed = 0;
  std::uint64_t fp = 0;
  std::uint64_t eq2 = 0;  // r p^{floor((n-r)/2)} for the witness's r
  bool pass = false;
  std::string error;  // nonempty iff the pipeline failed for this row
};

// Rows for n = 1..n_max. Pipeline failures are recorded per row.
std::vector<TheoremReport> theorem_table(std::uint32_t p, unsigned n_max, const BuildOptions& options = {});

inline constexpr const char* kMaximalityNote =
    "note: each row confirms the witness attains the claimed value and that the implemented bounds are "
    "consistent; maximality over all groups of order p^n is not re-derived.";

}  // namespace prdim
