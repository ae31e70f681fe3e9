#include "prdim/rdim.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "prdim/errors.hpp"
#include "prdim/modular.hpp"

namespace prdim {

std::uint64_t f_p(unsigned n, std::uint32_t p) {
  if (n == 0) throw DomainError("f_p: n must be positive");
  if (!is_prime(p)) throw DomainError("f_p: p must be prime");
  if (n % 2 == 0) return 2 * ipow(p, (n - 2) / 2);
  if (p != 2) return ipow(p, (n - 1) / 2);
  if (n == 1) return 1;
  return 3 * ipow(p, (n - 3) / 2);
}

std::uint64_t rdim_upper_bound(unsigned n, unsigned r, std::uint32_t p) {
  if (r < 1 || r > n) throw DomainError("rdim_upper_bound: need 1 <= r <= n");
  return r * ipow(p, (n - r) / 2);
}

std::optional<std::uint64_t> center_index_bound(const GroupTable& G, std::uint32_t p) {
  const auto omega = omega1_of_center(G, p);
  const auto derived = commutator_subgroup(G);
  const bool contained = std::all_of(omega.subgroup.members.begin(), omega.subgroup.members.end(),
                                     [&](Index z) { return derived.contains(z); });
  if (contained) return std::nullopt;
  const std::uint64_t index = G.order() / center(G).order();
  return 1 + (omega.rank - 1) * isqrt(index);
}

std::string to_string(RdimMethod m) { return m == RdimMethod::greedy ? "greedy" : "brute-force"; }

std::size_t fp_rank(const std::vector<std::vector<std::uint32_t>>& vectors, std::uint32_t p) {
  if (vectors.empty()) return 0;
  auto rows = vectors;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::uint64_t inv = inv_mod(rows[rank][c], p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] % p == 0) continue;
      const std::uint64_t f = rows[r][c] * inv % p;
      for (std::size_t j = 0; j < cols; ++j) {
        rows[r][j] = static_cast<std::uint32_t>((rows[r][j] + (p - f) * rows[rank][j]) % p);
      }
    }
    ++rank;
  }
  return rank;
}

namespace {

struct Prepared {
  std::size_t r = 0;
  std::vector<CentralVector> vectors;  // per irreducible
};

Prepared prepare(const GroupTable& G, std::uint32_t p, const CharacterTable& table) {
  if (p_power_exponent(G.order(), p) < 0) throw DomainError("min_faithful_dim: G is not a p-group");
  if (table.group().order() != G.order()) throw DimensionError("min_faithful_dim: table belongs to another group");
  Prepared out;
  const auto basis = omega1_basis(G, p);
  out.r = basis.size();
  for (std::size_t i = 0; i < table.num_irreducibles(); ++i) out.vectors.push_back(central_vector(table, i, basis, p));
  return out;
}

void verify_witness(const GroupTable& G, const CharacterTable& table, const RdimResult& res, std::size_t r) {
  if (res.witness.size() != r) throw VerificationError("min_faithful_dim: witness does not have r summands");
  std::vector<char> in_all(G.order(), 1);
  for (std::size_t irr : res.witness) {
    std::vector<char> in(G.order(), 0);
    for (Index g : kernel_of(table, irr).members) in[g] = 1;
    for (Index g = 0; g < G.order(); ++g) in_all[g] = in_all[g] && in[g];
  }
  for (Index g = 0; g < G.order(); ++g) {
    if (in_all[g] && g != G.identity()) {
      throw VerificationError("min_faithful_dim: witness kernels intersect nontrivially");
    }
  }
}

RdimResult assemble(const CharacterTable& table, const Prepared& prep, std::vector<std::size_t> chosen,
                    RdimMethod method) {
  RdimResult res;
  res.method = method;
  res.witness = std::move(chosen);
  for (std::size_t irr : res.witness) {
    res.witness_degrees.push_back(table.degree(irr));
    res.central_vectors.push_back(prep.vectors[irr]);
    res.value += table.degree(irr);
  }
  return res;
}

}  // namespace

RdimResult min_faithful_dim(const GroupTable& G, std::uint32_t p, const CharacterTable& table) {
  const auto prep = prepare(G, p, table);
  std::vector<std::size_t> order(table.num_irreducibles());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return table.degree(a) < table.degree(b); });
  std::vector<std::size_t> kept;
  std::vector<std::vector<std::uint32_t>> kept_vectors;
  for (std::size_t irr : order) {
    if (kept.size() == prep.r) break;
    kept_vectors.push_back(prep.vectors[irr].vector);
    if (fp_rank(kept_vectors, p) == kept_vectors.size()) {
      kept.push_back(irr);
    } else {
      kept_vectors.pop_back();
    }
  }
  auto res = assemble(table, prep, std::move(kept), RdimMethod::greedy);
  verify_witness(G, table, res, prep.r);
  return res;
}

RdimResult min_faithful_dim_bruteforce(const GroupTable& G, std::uint32_t p, const CharacterTable& table,
                                       std::uint64_t guard) {
  const auto prep = prepare(G, p, table);
  const std::size_t m = table.num_irreducibles();
  const std::size_t r = prep.r;
  // C(m, r) with early exit once past the guard.
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < r; ++i) {
    combos = combos * (m - i) / (i + 1);
    if (combos > guard) {
      throw SizeGuardError("min_faithful_dim_bruteforce: more than " + std::to_string(guard) + " subsets");
    }
  }

  std::vector<std::size_t> current, best;
  std::uint64_t best_value = ~std::uint64_t{0};
  std::function<void(std::size_t, std::uint64_t)> visit = [&](std::size_t start, std::uint64_t weight) {
    if (current.size() == r) {
      std::vector<std::vector<std::uint32_t>> vs;
      for (std::size_t irr : current) vs.push_back(prep.vectors[irr].vector);
      if (fp_rank(vs, p) == r && weight < best_value) {
        best_value = weight;
        best = current;
      }
      return;
    }
    for (std::size_t i = start; i + (r - current.size()) <= m; ++i) {
      current.push_back(i);
      visit(i + 1, weight + table.degree(i));
      current.pop_back();
    }
  };
  visit(0, 0);
  if (best_value == ~std::uint64_t{0} && r > 0) {
    throw VerificationError("min_faithful_dim_bruteforce: no faithful subset found");
  }
  auto res = assemble(table, prep, std::move(best), RdimMethod::brute_force);
  verify_witness(G, table, res, r);
  return res;
}

}  // namespace prdim
