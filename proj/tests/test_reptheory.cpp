#include <doctest.h>

#include <set>

#include "prdim/catalog.hpp"
#include "prdim/cyclotomic.hpp"
#include "prdim/errors.hpp"
#include "prdim/heisenberg.hpp"
#include "prdim/modular.hpp"
#include "prdim/reptheory.hpp"

using namespace prdim;

namespace {

using Row = std::vector<Multiplicities>;

// Characters of Z/n1 x ... as root-of-unity indicator vectors, straight from
// chi_a(g) = zeta_e^{sum a_i g_i e/n_i}.
std::set<Row> abelian_rows(const std::vector<unsigned>& moduli, const CharacterTable& t) {
  const unsigned e = t.exponent();
  std::size_t n = 1;
  for (auto m : moduli) n *= m;
  auto digits = [&](std::size_t x) {
    std::vector<unsigned> d(moduli.size());
    for (std::size_t i = moduli.size(); i-- > 0;) {
      d[i] = static_cast<unsigned>(x % moduli[i]);
      x /= moduli[i];
    }
    return d;
  };
  std::set<Row> rows;
  for (std::size_t a = 0; a < n; ++a) {
    Row row(t.num_classes(), Multiplicities(e, 0));
    const auto ad = digits(a);
    for (Index g = 0; g < n; ++g) {
      const auto gd = digits(g);
      unsigned k = 0;
      for (std::size_t i = 0; i < moduli.size(); ++i) k += ad[i] * gd[i] * (e / moduli[i]);
      row[t.class_of(g)][k % e] = 1;
    }
    rows.insert(row);
  }
  return rows;
}

std::set<Row> table_rows(const CharacterTable& t) {
  std::set<Row> rows;
  for (std::size_t i = 0; i < t.num_irreducibles(); ++i) {
    Row r;
    for (std::size_t c = 0; c < t.num_classes(); ++c) r.push_back(t.value(i, c));
    rows.insert(r);
  }
  return rows;
}

using Census = std::map<std::uint32_t, std::size_t>;

void check_integrity(const CharacterTable& t) {
  const auto& G = t.group();
  CHECK(t.num_irreducibles() == t.num_classes());
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < t.num_irreducibles(); ++i) sum += std::uint64_t{t.degree(i)} * t.degree(i);
  CHECK(sum == G.order());
  CHECK(rows_orthogonal(t));
  CHECK(columns_orthogonal(t));
  const auto idx = G.order() / center(G).order();
  for (std::size_t i = 0; i < t.num_irreducibles(); ++i) CHECK(std::uint64_t{t.degree(i)} * t.degree(i) <= idx);
  // trivial character first
  for (std::size_t c = 0; c < t.num_classes(); ++c) CHECK(t.value(0, c)[0] == 1);
}

}  // namespace

TEST_CASE("modular prime and root selection") {
  CHECK(choose_modular_prime(3, 27) == 13);  // 13 = 1 mod 3, 169 > 108
  CHECK(choose_modular_prime(4, 8) == 13);   // 5^2 = 25 < 32
  const auto l = choose_modular_prime(8, 128);
  CHECK((l - 1) % 8 == 0);
  CHECK(l * l > 4 * 128);
  const auto z = smallest_primitive_root_of_unity(8, l);
  CHECK(pow_mod(z, 8, l) == 1);
  CHECK(pow_mod(z, 4, l) != 1);
  for (std::uint64_t y = 2; y < z; ++y) CHECK((pow_mod(y, 8, l) != 1 || pow_mod(y, 4, l) == 1));
}

TEST_CASE("abelian tables match the direct DFT") {
  {
    const auto t = character_table(cyclic_group(3));
    CHECK(t.exponent() == 3);
    CHECK(table_rows(t) == abelian_rows({3}, t));
    check_integrity(t);
  }
  for (auto [moduli, G] : {std::pair{std::vector<unsigned>{4, 2}, direct_product(cyclic_group(4), cyclic_group(2))},
                           {std::vector<unsigned>{2, 2, 2}, elementary_abelian(2, 3)},
                           {std::vector<unsigned>{9}, cyclic_group(9)},
                           {std::vector<unsigned>{5, 5}, elementary_abelian(5, 2)}}) {
    const auto t = character_table(G);
    CHECK(table_rows(t) == abelian_rows(moduli, t));
    check_integrity(t);
  }
}

TEST_CASE("degree censuses") {
  CHECK(degree_census(character_table(build_group("heisenberg(3,2,1)").group)) == Census{{1, 9}, {3, 2}});
  CHECK(degree_census(character_table(build_group("heisenberg(2,4,2)").group)) == Census{{1, 16}, {4, 3}});
  CHECK(degree_census(character_table(exceptional128())) == Census{{1, 16}, {2, 4}, {4, 6}});
  CHECK(degree_census(character_table(build_group("q8").group)) == Census{{1, 4}, {2, 1}});
  CHECK(degree_census(character_table(elementary_abelian(2, 5))) == Census{{1, 32}});
}

TEST_CASE("integrity across groups") {
  for (const auto* spec : {"q8", "d8", "heisenberg(3,2,1)", "heisenberg(5,2,1)", "heisenberg(2,4,1)",
                           "product(cyclic(3), heisenberg(3,2,1))", "exceptional128", "product(cyclic(4), q8)"}) {
    CAPTURE(spec);
    check_integrity(character_table(build_group(spec).group));
  }
}

TEST_CASE("heisenberg characters vanish off the centre") {
  for (const auto* spec : {"heisenberg(3,2,1)", "heisenberg(2,4,2)", "heisenberg(2,4,1)", "heisenberg(5,2,1)"}) {
    CAPTURE(spec);
    const auto built = build_group(spec);
    const auto& hs = *built.heisenberg;
    const auto t = character_table(built.group);
    const auto Z = center(built.group);
    const std::uint32_t root_v = static_cast<std::uint32_t>(isqrt(ipow(hs.p(), hs.dim_v())));
    for (std::size_t i = 0; i < t.num_irreducibles(); ++i) {
      if (t.degree(i) == 1) continue;
      CHECK(t.degree(i) == root_v);
      for (Index g = 0; g < built.group.order(); ++g)
        if (!Z.contains(g)) CHECK(t.cyclotomic_value(i, t.class_of(g)).is_zero());
    }
  }
}

TEST_CASE("kernels") {
  const auto q8 = build_group("q8").group;
  const auto t = character_table(q8);
  CHECK(kernel_of(t, 0).order() == 8);
  const std::size_t last = t.num_irreducibles() - 1;
  CHECK(t.degree(last) == 2);
  CHECK(kernel_of(t, last).order() == 1);

  const auto E = exceptional128();
  const auto te = character_table(E);
  const auto gg = commutator_subgroup(E);
  for (std::size_t i = 0; i < te.num_irreducibles(); ++i) {
    const auto k = kernel_of(te, i);
    if (te.degree(i) == 1)
      for (Index g : gg.members) CHECK(k.contains(g));
    else
      CHECK_FALSE(std::includes(k.members.begin(), k.members.end(), gg.members.begin(), gg.members.end()));
  }
}

TEST_CASE("central vectors") {
  const auto H = build_group("heisenberg(3,2,1)").group;
  const auto t = character_table(H);
  const auto basis = omega1_basis(H, 3);
  std::set<std::vector<std::uint32_t>> big;
  for (std::size_t i = 0; i < t.num_irreducibles(); ++i) {
    const auto cv = central_vector(t, i, basis, 3);
    if (t.degree(i) == 1)
      CHECK(cv.vector == std::vector<std::uint32_t>{0});
    else
      big.insert(cv.vector);
  }
  CHECK(big == std::set<std::vector<std::uint32_t>>{{1}, {2}});

  const auto E = exceptional128();
  const auto te = character_table(E);
  const auto eb = omega1_basis(E, 2);
  REQUIRE(eb.size() == 3);
  std::set<std::vector<std::uint32_t>> fours, twos;
  for (std::size_t i = 0; i < te.num_irreducibles(); ++i) {
    const auto v = central_vector(te, i, eb, 2).vector;
    if (te.degree(i) == 4) fours.insert(v);
    if (te.degree(i) == 2) twos.insert(v);
  }
  CHECK(fours.size() == 6);
  CHECK(twos.size() == 1);
  CHECK_FALSE(fours.contains({0, 0, 0}));
  CHECK_FALSE(fours.contains(*twos.begin()));
}

TEST_CASE("cyclotomic integers") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(9) == std::vector<std::int64_t>{1, 0, 0, 1, 0, 0, 1});
  CHECK(cyclotomic_polynomial(8) == std::vector<std::int64_t>{1, 0, 0, 0, 1});
  // 1 + zeta_3 + zeta_3^2 = 0
  CHECK(CyclotomicInteger(3, {1, 1, 1}).is_zero());
  CHECK_FALSE(CyclotomicInteger(3, {1, 1, 0}).is_zero());
  // zeta_4^2 = -1
  const CyclotomicInteger i4(4, {0, 1, 0, 0});
  CHECK((i4 * i4).equals(CyclotomicInteger::constant(4, -1)));
  CHECK((i4 * i4.conj()).equals(CyclotomicInteger::constant(4, 1)));
  const CyclotomicInteger w(9, {2, 0, 1, 0, 0, 3, 0, 0, 1});
  CHECK((w + w).equals(w.scaled(2)));
  CHECK((w - w).is_zero());
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(character_table(build_group("heisenberg(3,2,1)").group, 10), SizeGuardError);
}
