#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "prdim/errors.hpp"
#include "prdim/ffield.hpp"

using namespace prdim;

namespace {

// Leibniz expansion over all permutations; independent of elimination.
std::int64_t leibniz_det(const FqMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t total = 0;
  do {
    std::int64_t term = 1;
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]) % m.modulus();
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    total += (inversions % 2 ? -term : term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  const std::int64_t p = m.modulus();
  return ((total % p) + p) % p;
}

// Largest k with a nonzero k x k minor.
std::size_t minor_rank(const FqMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  for (std::size_t k = std::min(r, c); k > 0; --k) {
    std::vector<char> rs(r, 0), cs(c, 0);
    std::fill(rs.begin(), rs.begin() + static_cast<std::ptrdiff_t>(k), 1);
    do {
      std::fill(cs.begin(), cs.end(), 0);
      std::fill(cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(k), 1);
      do {
        FqMatrix sub(m.modulus(), k, k);
        std::size_t si = 0;
        for (std::size_t i = 0; i < r; ++i) {
          if (!rs[i]) continue;
          std::size_t sj = 0;
          for (std::size_t j = 0; j < c; ++j)
            if (cs[j]) sub.set(si, sj++, m(i, j));
          ++si;
        }
        if (leibniz_det(sub) != 0) return k;
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
  }
  return 0;
}

FqMatrix from_counter(std::uint32_t p, std::size_t n, std::uint64_t counter) {
  FqMatrix m(p, n, n);
  for (std::size_t i = 0; i < n * n; ++i) {
    m.set(i / n, i % n, static_cast<std::int64_t>(counter % p));
    counter /= p;
  }
  return m;
}

}  // namespace

TEST_CASE("det examples") {
  CHECK(det(FqMatrix::identity(5, 3)).value() == 1);
  CHECK(det(FqMatrix(2, {{0, 1}, {1, 0}})).value() == 1);
  // Sum of the three order-128 generators (its one degenerate element).
  const FqMatrix a(2, {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}});
  const FqMatrix b(2, {{0, 0, 1, 0}, {0, 0, 1, 1}, {1, 1, 0, 0}, {0, 1, 0, 0}});
  const FqMatrix c(2, {{0, 0, 1, 1}, {0, 0, 0, 1}, {1, 0, 0, 1}, {1, 1, 1, 0}});
  CHECK(det(a + b + c).value() == 0);
  CHECK(rank(a) == 4);
  CHECK(minor_rank(a) == 4);
}

TEST_CASE("det rejects non-square input") {
  CHECK_THROWS_AS(det(FqMatrix(3, 2, 3)), DimensionError);
}

TEST_CASE("rank examples") {
  CHECK(rank(FqMatrix(3, 2, 3)) == 0);
  CHECK(rank(FqMatrix::identity(2, 4)) == 4);
}

TEST_CASE("det and rank agree with the cofactor and minor oracles") {
  SUBCASE("every 2x2 and 3x3 matrix over F_2 and F_3") {
    for (std::uint32_t p : {2U, 3U}) {
      for (std::size_t n : {2U, 3U}) {
        const std::uint64_t total = ipow(p, static_cast<unsigned>(n * n));
        for (std::uint64_t k = 0; k < total; ++k) {
          const auto m = from_counter(p, n, k);
          REQUIRE(det(m).value() == leibniz_det(m));
          if (n == 2 || k % 7 == 0) REQUIRE(rank(m) == minor_rank(m));
        }
      }
    }
  }
  SUBCASE("sampled 4x4 over F_2, F_3, F_5 and rectangular shapes") {
    std::mt19937_64 rng(12345);
    for (std::uint32_t p : {2U, 3U, 5U}) {
      std::uniform_int_distribution<int> digit(0, static_cast<int>(p) - 1);
      for (int trial = 0; trial < 300; ++trial) {
        FqMatrix m(p, 4, 4);
        for (std::size_t i = 0; i < 16; ++i) m.set(i / 4, i % 4, digit(rng));
        // low-rank examples: duplicate a row now and then
        if (trial % 5 == 0)
          for (std::size_t j = 0; j < 4; ++j) m.set(3, j, m(0, j) * 2 + m(1, j));
        REQUIRE(det(m).value() == leibniz_det(m));
        REQUIRE(rank(m) == minor_rank(m));
        FqMatrix rect(p, 3, 4);
        for (std::size_t i = 0; i < 12; ++i) rect.set(i / 4, i % 4, digit(rng));
        REQUIRE(rank(rect) == minor_rank(rect));
      }
    }
  }
}

TEST_CASE("find_irreducible picks the lexicographically smallest polynomial") {
  CHECK(find_irreducible(2, 1).coefficients == std::vector<std::uint32_t>{0, 1});
  CHECK(find_irreducible(2, 2).coefficients == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(find_irreducible(3, 2).coefficients == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(find_irreducible(2, 3).coefficients == std::vector<std::uint32_t>{1, 1, 0, 1});
  CHECK(find_irreducible(3, 2).to_string() == "x^2 + 1");
  CHECK_THROWS_AS(find_irreducible(2, 7), SizeGuardError);
  CHECK_THROWS_AS(find_irreducible(4, 2), DomainError);
  CHECK_THROWS_AS(find_irreducible(37, 1), SizeGuardError);
}

TEST_CASE("accepted polynomials have no roots and no small factors") {
  for (std::uint32_t p : {2U, 3U, 5U, 7U}) {
    for (unsigned m = 1; m <= 4; ++m) {
      const auto poly = find_irreducible(p, m);
      REQUIRE(poly.degree() == m);
      REQUIRE(poly.coefficients.back() == 1);
      if (m >= 2) {
        for (std::uint64_t x = 0; x < p; ++x) {
          std::uint64_t acc = 0;
          for (std::size_t i = poly.coefficients.size(); i-- > 0;) acc = (acc * x + poly.coefficients[i]) % p;
          REQUIRE(acc != 0);
        }
      }
      // every polynomial scanned before it is reducible
      REQUIRE(is_irreducible(p, poly.coefficients));
    }
  }
  CHECK_FALSE(is_irreducible(2, std::vector<std::uint32_t>{1, 0, 1}));  // (x+1)^2
  CHECK_FALSE(is_irreducible(2, std::vector<std::uint32_t>{1, 1, 1, 1, 1, 0, 1}));
}

TEST_CASE("regular embedding") {
  const auto w1 = regular_embedding(find_irreducible(2, 1));
  REQUIRE(w1.size() == 1);
  CHECK(w1[0] == FqMatrix::identity(2, 1));

  const auto w2 = regular_embedding(find_irreducible(2, 2));
  REQUIRE(w2.size() == 2);
  CHECK(w2[0] == FqMatrix::identity(2, 2));
  CHECK(w2[1] == FqMatrix(2, {{0, 1}, {1, 1}}));
}

TEST_CASE("every nonzero combination of the regular embedding is invertible") {
  for (auto [p, m] : {std::pair{3U, 2U}, {2U, 3U}, {5U, 2U}, {2U, 4U}, {3U, 3U}, {7U, 2U}}) {
    const auto ws = regular_embedding(find_irreducible(p, m));
    const std::uint64_t total = ipow(p, m);
    std::size_t checked = 0;
    for (std::uint64_t k = 1; k < total; ++k) {
      FqMatrix sum(p, m, m);
      std::uint64_t x = k;
      for (unsigned i = 0; i < m; ++i) {
        sum = sum + ws[i].scaled(static_cast<std::uint32_t>(x % p));
        x /= p;
      }
      REQUIRE_FALSE(det(sum).is_zero());
      ++checked;
    }
    CHECK(checked == total - 1);
  }
}

TEST_CASE("prime field element arithmetic") {
  const PrimeFieldElement a(3, 7), b(5, 7);
  CHECK((a + b).value() == 1);
  CHECK((a - b).value() == 5);
  CHECK((a * b).value() == 1);
  CHECK((a * a.inverse()).value() == 1);
  CHECK(PrimeFieldElement(-1, 5).value() == 4);
  CHECK_THROWS_AS(PrimeFieldElement(1, 9), DomainError);
  CHECK_THROWS_AS(a + PrimeFieldElement(1, 5), DimensionError);
}
