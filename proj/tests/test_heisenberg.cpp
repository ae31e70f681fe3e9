#include <doctest.h>

#include "prdim/catalog.hpp"
#include "prdim/errors.hpp"
#include "prdim/heisenberg.hpp"

using namespace prdim;

namespace {

// Central elements of H(V,K,beta) with v = 0.
Subgroup kstar(const HeisenbergSpec& spec) {
  Subgroup s;
  const Index n = static_cast<Index>(spec.order());
  for (Index i = 0; i < n; ++i) {
    const auto x = decode(spec, i);
    if (std::all_of(x.v.begin(), x.v.end(), [](auto c) { return c == 0; })) s.members.push_back(i);
  }
  return s;
}

}  // namespace

TEST_CASE("encode/decode") {
  const HeisenbergSpec spec(build_symplectic(3, 1));
  CHECK(spec.order() == 27);
  CHECK(encode(spec, {{0, 0}, {0}}) == 0);
  CHECK(encode(spec, {{1, 2}, {1}}) == 9 + 6 + 1);
  for (Index i = 0; i < 27; ++i) CHECK(encode(spec, decode(spec, i)) == i);
}

TEST_CASE("group law") {
  const HeisenbergSpec spec(build_symplectic(3, 1));
  const auto G = build_heisenberg(spec);
  CHECK(G.identity() == 0);
  // (e1,0)(e2,0) = (e1+e2, beta(e1,e2)); default beta vanishes above the diagonal
  const Index e1 = encode(spec, {{1, 0}, {0}});
  const Index e2 = encode(spec, {{0, 1}, {0}});
  CHECK(decode(spec, G.mul(e1, e2)) == HeisenbergElement{{1, 1}, {0}});
  CHECK(decode(spec, G.mul(e2, e1)) == HeisenbergElement{{1, 1}, {2}});
  CHECK(center(G).order() == 3);
  CHECK(G.label(e1) == "(10|0)");
}

TEST_CASE("commutators are omega_K") {
  for (const auto& spec : {HeisenbergSpec(build_symplectic(3, 1)), HeisenbergSpec(build_symplectic(2, 2)),
                           exceptional128_spec(), HeisenbergSpec(exceptional128_forms(), exceptional128_alternate_beta()),
                           quaternion_spec(), dihedral_spec()}) {
    const auto G = build_heisenberg(spec);
    const std::size_t k = spec.dim_k();
    for (Index a = 0; a < G.order(); a += 3)
      for (Index b = 0; b < G.order(); b += 5) {
        const auto c = decode(spec, G.commutator(a, b));
        CHECK(c.v == FpVector(spec.dim_v(), 0));
        CHECK(c.t == omega_eval(spec.forms(), decode(spec, a).v, decode(spec, b).v));
      }
    // Z = [G,G] = K*
    const auto ks = kstar(spec);
    CHECK(ks.order() == ipow(spec.p(), k));
    CHECK(center(G) == ks);
    CHECK(commutator_subgroup(G) == ks);
  }
}

TEST_CASE("changing beta by a symmetric form keeps commutators") {
  const auto K = exceptional128_forms();
  const auto G0 = build_heisenberg(HeisenbergSpec(K));
  const auto G1 = build_heisenberg(HeisenbergSpec(K, exceptional128_alternate_beta()));
  bool differs = false;
  for (Index a = 0; a < 128; ++a)
    for (Index b = 0; b < 128; ++b) {
      CHECK(G0.commutator(a, b) == G1.commutator(a, b));
      differs = differs || G0.mul(a, b) != G1.mul(a, b);
    }
  CHECK(differs);
  CHECK(isoclinic(G0, G1));
}

TEST_CASE("quaternion and dihedral pair") {
  using Spectrum = std::map<std::uint64_t, std::size_t>;
  CHECK(order_spectrum(build_heisenberg(quaternion_spec())) == Spectrum{{1, 1}, {2, 1}, {4, 6}});
  CHECK(order_spectrum(build_heisenberg(dihedral_spec())) == Spectrum{{1, 1}, {2, 5}, {4, 2}});
}

TEST_CASE("verify_special") {
  CHECK(verify_special(build_group("heisenberg(3,2,1)").group));
  CHECK(verify_special(exceptional128()));
  CHECK(verify_special(build_group("heisenberg(2,4,2)").group));
  CHECK(verify_special(build_group("q8").group));
  CHECK_FALSE(verify_special(build_group("product(cyclic(3), heisenberg(3,2,1))").group));
  CHECK_FALSE(verify_special(build_group("product(cyclic(4), q8)").group));
  CHECK_THROWS_AS(verify_special(elementary_abelian(2, 3)), DomainError);
  CHECK_THROWS_AS(verify_special(direct_product(cyclic_group(3), build_group("q8").group)), DomainError);
}

TEST_CASE("half omega beta") {
  const auto K = build_symplectic(5, 1);
  const HeisenbergSpec spec(K, half_omega_beta(K));
  const auto G = build_heisenberg(spec);
  // with beta = omega/2, (v,0)^-1 = (-v,0)
  for (Index i = 0; i < G.order(); ++i) {
    auto x = decode(spec, i);
    if (x.t != FpVector{0}) continue;
    for (auto& c : x.v) c = (5 - c) % 5;
    CHECK(G.inv(i) == encode(spec, x));
  }
  CHECK(verify_special(G));
}

TEST_CASE("mismatched beta is rejected") {
  const auto beta = default_beta(build_symplectic(3, 1));
  CHECK_THROWS(HeisenbergSpec(build_symplectic(5, 1), beta));
  CHECK_THROWS_AS(build_heisenberg(HeisenbergSpec(build_symplectic(2, 3)), 0, 256), SizeGuardError);
}
