#include <doctest.h>

#include "prdim/catalog.hpp"
#include "prdim/errors.hpp"
#include "prdim/rdim.hpp"

using namespace prdim;

namespace {

// Minimum total degree over every subset of irreducibles whose kernels meet
// trivially. Uses kernels only, no central characters.
std::uint64_t subset_oracle(const CharacterTable& t) {
  const std::size_t m = t.num_irreducibles();
  REQUIRE(m <= 20);
  std::vector<std::vector<bool>> in_kernel(m, std::vector<bool>(t.group().order(), false));
  for (std::size_t i = 0; i < m; ++i)
    for (Index g : kernel_of(t, i).members) in_kernel[i][g] = true;
  std::uint64_t best = UINT64_MAX;
  for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
    std::uint64_t deg = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) deg += t.degree(i);
    if (deg >= best) continue;
    bool faithful = true;
    for (Index g = 0; g < t.group().order() && faithful; ++g) {
      if (g == t.group().identity()) continue;
      bool all = true;
      for (std::size_t i = 0; i < m && all; ++i)
        if (mask >> i & 1) all = in_kernel[i][g];
      faithful = !all;
    }
    if (faithful) best = deg;
  }
  return best;
}

// max over r of r p^floor((n-r)/2), by enumeration.
std::uint64_t fp_by_enumeration(unsigned n, std::uint32_t p) {
  std::uint64_t best = 0;
  for (unsigned r = 1; r <= n; ++r) best = std::max(best, rdim_upper_bound(n, r, p));
  return best;
}

RdimResult rdim_of(const std::string& spec) {
  const auto G = build_group(spec).group;
  return min_faithful_dim(G, group_prime(G), character_table(G));
}

}  // namespace

TEST_CASE("f_p values") {
  CHECK(f_p(1, 2) == 1);
  CHECK(f_p(5, 2) == 6);
  CHECK(f_p(6, 2) == 8);
  CHECK(f_p(7, 2) == 12);
  CHECK(f_p(3, 3) == 3);
  CHECK(f_p(5, 3) == 9);
  CHECK(f_p(4, 5) == 10);
  CHECK(f_p(2, 7) == 2);
}

TEST_CASE("r p^floor((n-r)/2) bound") {
  CHECK(rdim_upper_bound(5, 5, 2) == 5);
  CHECK(rdim_upper_bound(7, 3, 2) == 12);
  CHECK(rdim_upper_bound(4, 1, 3) == 3);
  for (std::uint32_t p : {2U, 3U, 5U})
    for (unsigned n = 1; n <= 12; ++n) {
      CAPTURE(p);
      CAPTURE(n);
      CHECK(fp_by_enumeration(n, p) == f_p(n, p));
    }
}

TEST_CASE("center index bound") {
  CHECK(center_index_bound(build_group("product(cyclic(3), heisenberg(3,2,1))").group, 3) == 4);
  CHECK_FALSE(center_index_bound(exceptional128(), 2).has_value());
  CHECK(center_index_bound(elementary_abelian(2, 5), 2) == 5);
  CHECK_FALSE(center_index_bound(build_group("heisenberg(3,2,1)").group, 3).has_value());
  CHECK_THROWS_AS(center_index_bound(cyclic_group(6), 2), DomainError);
}

TEST_CASE("greedy solver") {
  CHECK(rdim_of("elementary(3,2)").value == 2);
  const auto h = rdim_of("heisenberg(3,2,1)");
  CHECK(h.value == 3);
  CHECK(h.witness_degrees == std::vector<std::uint32_t>{3});
  CHECK(h.method == RdimMethod::greedy);

  const auto e = rdim_of("exceptional128");
  CHECK(e.value == 10);
  auto degs = e.witness_degrees;
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<std::uint32_t>{2, 4, 4});
  CHECK(e.central_vectors.size() == 3);

  const auto G1 = build_heisenberg(HeisenbergSpec(exceptional128_forms(), exceptional128_alternate_beta()));
  CHECK(min_faithful_dim(G1, 2, character_table(G1)).value == 10);

  CHECK(rdim_of("product(cyclic(3), heisenberg(3,2,1))").value == 4);
  CHECK(rdim_of("elementary(2,5)").value == 5);
  CHECK_THROWS_AS(min_faithful_dim(cyclic_group(6), 2, character_table(cyclic_group(6))), DomainError);
}

TEST_CASE("abelian rdim is the rank") {
  for (auto [spec, rank] : {std::pair{"cyclic(8)", 1}, {"product(cyclic(4), cyclic(2))", 2},
                            {"elementary(2,4)", 4}, {"product(cyclic(9), elementary(3,2))", 3},
                            {"product(cyclic(4), product(cyclic(2), cyclic(8)))", 3}}) {
    CAPTURE(spec);
    CHECK(rdim_of(spec).value == static_cast<std::uint64_t>(rank));
  }
}

TEST_CASE("brute force oracle") {
  for (const auto* spec : {"q8", "d8"}) {
    const auto G = build_group(spec).group;
    const auto t = character_table(G);
    const auto bf = min_faithful_dim_bruteforce(G, 2, t);
    CHECK(bf.value == 2);
    CHECK(bf.method == RdimMethod::brute_force);
  }
  const auto G = build_group("heisenberg(5,2,1)").group;
  CHECK_THROWS_AS(min_faithful_dim_bruteforce(G, 5, character_table(G), 3), SizeGuardError);
}

TEST_CASE("greedy, brute force and kernel subsets agree") {
  for (const auto* spec : {"q8", "d8", "cyclic(4)", "elementary(2,3)", "product(cyclic(4), cyclic(2))",
                           "elementary(3,2)", "heisenberg(3,2,1)", "product(cyclic(2), q8)",
                           "heisenberg(2,4,1)", "product(cyclic(2), d8)"}) {
    CAPTURE(spec);
    const auto G = build_group(spec).group;
    const auto p = group_prime(G);
    const auto t = character_table(G);
    const auto g = min_faithful_dim(G, p, t);
    const auto b = min_faithful_dim_bruteforce(G, p, t);
    CHECK(g.value == b.value);
    if (t.num_irreducibles() <= 20) CHECK(g.value == subset_oracle(t));
    CHECK(g.witness.size() == omega1_of_center(G, p).rank);
  }
}

TEST_CASE("fp_rank") {
  CHECK(fp_rank({{1, 0}, {0, 1}, {1, 1}}, 2) == 2);
  CHECK(fp_rank({{1, 2}, {2, 1}}, 3) == 1);
  CHECK(fp_rank({{1, 2}, {2, 1}}, 5) == 2);
  CHECK(fp_rank({}, 3) == 0);
}

TEST_CASE("method names") {
  CHECK(to_string(RdimMethod::greedy) == "greedy");
  CHECK(to_string(RdimMethod::brute_force) == "brute-force");
}
