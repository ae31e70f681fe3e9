#include "prdim/heisenberg.hpp"

#include <string>
#include <utility>

#include "prdim/errors.hpp"

namespace prdim {

HeisenbergSpec::HeisenbergSpec(FormSpace forms) : forms_(std::move(forms)), beta_(default_beta(forms_)) {}

HeisenbergSpec::HeisenbergSpec(FormSpace forms, BilinearMap beta) : forms_(std::move(forms)), beta_(std::move(beta)) {
  if (beta_.p() != forms_.p() || beta_.dim_v() != forms_.dim_v() || beta_.dim_k() != forms_.dim_k()) {
    throw ConstructionError("HeisenbergSpec: beta does not match the form space");
  }
  // Re-validate the decomposition identity against this form space.
  BilinearMap(forms_, beta_.table());
}

std::uint64_t HeisenbergSpec::order() const { return ipow(p(), static_cast<unsigned>(dim_v() + dim_k())); }

Index encode(const HeisenbergSpec& spec, const HeisenbergElement& x) {
  if (x.v.size() != spec.dim_v() || x.t.size() != spec.dim_k()) throw DimensionError("encode: wrong lengths");
  std::uint64_t idx = 0;
  for (auto c : x.v) idx = idx * spec.p() + c % spec.p();
  for (auto c : x.t) idx = idx * spec.p() + c % spec.p();
  return static_cast<Index>(idx);
}

HeisenbergElement decode(const HeisenbergSpec& spec, Index index) {
  HeisenbergElement x{FpVector(spec.dim_v()), FpVector(spec.dim_k())};
  std::uint64_t idx = index;
  for (std::size_t i = spec.dim_k(); i-- > 0;) {
    x.t[i] = static_cast<std::uint32_t>(idx % spec.p());
    idx /= spec.p();
  }
  for (std::size_t i = spec.dim_v(); i-- > 0;) {
    x.v[i] = static_cast<std::uint32_t>(idx % spec.p());
    idx /= spec.p();
  }
  return x;
}

GroupTable build_heisenberg(const HeisenbergSpec& spec, std::uint64_t seed, std::size_t order_cap) {
  const std::uint64_t order = spec.order();
  if (order > order_cap) {
    throw SizeGuardError("build_heisenberg: order " + std::to_string(order) + " exceeds cap " +
                         std::to_string(order_cap));
  }
  const std::uint32_t p = spec.p();
  const std::size_t nv = ipow(p, static_cast<unsigned>(spec.dim_v()));
  const std::size_t nt = ipow(p, static_cast<unsigned>(spec.dim_k()));
  const std::size_t n = nv * nt;

  std::vector<FpVector> vs(nv), ts(nt);
  for (std::size_t i = 0; i < nv; ++i) vs[i] = decode(spec, static_cast<Index>(i * nt)).v;
  for (std::size_t i = 0; i < nt; ++i) ts[i] = decode(spec, static_cast<Index>(i)).t;

  const auto t_index = [&](const FpVector& t) {
    std::size_t idx = 0;
    for (auto c : t) idx = idx * p + c;
    return idx;
  };
  // (v, v') -> index of v + v' and of beta(v, v').
  std::vector<std::size_t> vsum(nv * nv), beta_idx(nv * nv);
  for (std::size_t a = 0; a < nv; ++a) {
    for (std::size_t b = 0; b < nv; ++b) {
      std::size_t s = 0;
      for (std::size_t i = 0; i < spec.dim_v(); ++i) s = s * p + (vs[a][i] + vs[b][i]) % p;
      vsum[a * nv + b] = s;
      beta_idx[a * nv + b] = t_index(spec.beta()(vs[a], vs[b]));
    }
  }
  std::vector<std::size_t> tsum(nt * nt);
  for (std::size_t a = 0; a < nt; ++a) {
    for (std::size_t b = 0; b < nt; ++b) {
      FpVector s(spec.dim_k());
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = (ts[a][i] + ts[b][i]) % p;
      tsum[a * nt + b] = t_index(s);
    }
  }

  std::vector<Index> mult(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t va = x / nt, ta = x % nt;
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t vb = y / nt, tb = y % nt;
      const std::size_t t = tsum[tsum[ta * nt + tb] * nt + beta_idx[va * nv + vb]];
      mult[x * n + y] = static_cast<Index>(vsum[va * nv + vb] * nt + t);
    }
  }

  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::string s = "(";
    for (auto c : vs[x / nt]) s += std::to_string(c);
    s += "|";
    for (auto c : ts[x % nt]) s += std::to_string(c);
    labels[x] = s + ")";
  }
  return {std::move(mult), std::move(labels), seed, order_cap};
}

bool verify_special(const GroupTable& G) {
  const std::uint32_t p = group_prime(G);
  if (is_abelian(G)) throw DomainError("verify_special: the group is abelian");
  const auto z = center(G);
  const auto d = commutator_subgroup(G);
  if (!(z == d)) return false;
  for (Index g = 0; g < G.order(); ++g) {
    if (!d.contains(G.pow(g, p))) return false;
  }
  return true;
}

}  // namespace prdim
