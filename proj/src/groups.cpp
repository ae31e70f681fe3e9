#include "prdim/groups.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <random>
#include <utility>

#include "prdim/errors.hpp"
#include "prdim/modular.hpp"

namespace prdim {

GroupTable::GroupTable(std::vector<Index> mult, std::vector<std::string> labels, std::uint64_t seed,
                       std::size_t order_cap) {
  auto data = std::make_shared<Data>();
  const std::size_t n = isqrt(mult.size());
  if (n == 0 || n * n != mult.size()) throw DimensionError("GroupTable: table must be n x n with n >= 1");
  if (n > order_cap) {
    throw SizeGuardError("GroupTable: order " + std::to_string(n) + " exceeds cap " + std::to_string(order_cap));
  }
  if (!labels.empty() && labels.size() != n) throw DimensionError("GroupTable: label count must equal order");
  data->n = n;
  data->mult = std::move(mult);
  data->labels = std::move(labels);
  const auto& m = data->mult;

  // Latin square: every row and column is a permutation.
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (std::size_t a = 0; a < n; ++a) {
    ++stamp;
    for (std::size_t b = 0; b < n; ++b) {
      const Index v = m[a * n + b];
      if (v >= n) throw ConstructionError("GroupTable: entry out of range");
      if (seen[v] == stamp) throw ConstructionError("GroupTable: row " + std::to_string(a) + " is not a permutation");
      seen[v] = stamp;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    ++stamp;
    for (std::size_t a = 0; a < n; ++a) {
      const Index v = m[a * n + b];
      if (seen[v] == stamp) {
        throw ConstructionError("GroupTable: column " + std::to_string(b) + " is not a permutation");
      }
      seen[v] = stamp;
    }
  }

  // Two-sided identity.
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = m[e * n + a] == a && m[a * n + e] == a;
    if (ok) {
      data->identity = static_cast<Index>(e);
      found = true;
    }
  }
  if (!found) throw ConstructionError("GroupTable: no two-sided identity");

  const auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (m[std::size_t{m[a * n + b]} * n + c] != m[a * n + m[b * n + c]]) {
      throw ConstructionError("GroupTable: associativity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                              "," + std::to_string(c) + ")");
    }
  };
  if (n <= kExhaustiveAssociativityLimit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < kAssociativitySamples; ++s) {
      const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
      check(a, b, c);
    }
  }

  // Latin rows guarantee a unique right inverse; associativity makes it two-sided.
  data->inv.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (m[a * n + b] == data->identity) {
        data->inv[a] = static_cast<Index>(b);
        break;
      }
    }
    if (m[std::size_t{data->inv[a]} * n + a] != data->identity) {
      throw ConstructionError("GroupTable: left and right inverses differ");
    }
  }
  data_ = std::move(data);
}

Index GroupTable::pow(Index a, std::uint64_t k) const {
  Index result = identity();
  Index base = a;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

std::uint64_t GroupTable::element_order(Index a) const {
  std::uint64_t k = 1;
  for (Index x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

std::string GroupTable::label(Index a) const {
  return data_->labels.empty() ? std::to_string(a) : data_->labels[a];
}

bool Subgroup::contains(Index g) const { return std::binary_search(members.begin(), members.end(), g); }

bool is_abelian(const GroupTable& G) {
  for (Index a = 0; a < G.order(); ++a)
    for (Index b = a + 1; b < G.order(); ++b)
      if (G.mul(a, b) != G.mul(b, a)) return false;
  return true;
}

Subgroup generated_subgroup(const GroupTable& G, std::span<const Index> gens) {
  std::vector<char> in(G.order(), 0);
  std::vector<Index> members{G.identity()};
  in[G.identity()] = 1;
  // Right multiplication by generators from every reached element; in a finite
  // group the reached set is closed under products and inverses.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Index g : gens) {
      const Index x = G.mul(members[i], g);
      if (!in[x]) {
        in[x] = 1;
        members.push_back(x);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return {std::move(members)};
}

bool is_subgroup(const GroupTable& G, const Subgroup& H) {
  if (!H.contains(G.identity())) return false;
  for (Index a : H.members) {
    if (!H.contains(G.inv(a))) return false;
    for (Index b : H.members)
      if (!H.contains(G.mul(a, b))) return false;
  }
  return true;
}

bool is_normal(const GroupTable& G, const Subgroup& H) {
  if (!is_subgroup(G, H)) return false;
  for (Index h : H.members)
    for (Index g = 0; g < G.order(); ++g)
      if (!H.contains(G.conjugate(h, g))) return false;
  return true;
}

Subgroup center(const GroupTable& G) {
  Subgroup z;
  for (Index a = 0; a < G.order(); ++a) {
    bool central = true;
    for (Index b = 0; b < G.order() && central; ++b) central = G.mul(a, b) == G.mul(b, a);
    if (central) z.members.push_back(a);
  }
  return z;
}

Subgroup commutator_subgroup(const GroupTable& G) {
  std::vector<char> seen(G.order(), 0);
  std::vector<Index> comms;
  for (Index a = 0; a < G.order(); ++a) {
    for (Index b = 0; b < G.order(); ++b) {
      const Index c = G.commutator(a, b);
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  }
  return generated_subgroup(G, comms);
}

std::uint32_t group_prime(const GroupTable& G) {
  const auto p = smallest_prime_factor(G.order());
  if (p == 0 || p_power_exponent(G.order(), p) < 0) {
    throw DomainError("group of order " + std::to_string(G.order()) + " is not a nontrivial p-group");
  }
  return static_cast<std::uint32_t>(p);
}

Omega1Result omega1_of_center(const GroupTable& G, std::uint32_t p) {
  if (!is_prime(p) || p_power_exponent(G.order(), p) < 0) {
    throw DomainError("omega1_of_center: |G| = " + std::to_string(G.order()) + " is not a power of " +
                      std::to_string(p));
  }
  Omega1Result out;
  for (Index z : center(G).members) {
    if (G.pow(z, p) == G.identity()) out.subgroup.members.push_back(z);
  }
  const int r = p_power_exponent(out.subgroup.order(), p);
  if (r < 0) throw VerificationError("omega1_of_center: subgroup order is not a power of p");
  out.rank = static_cast<std::size_t>(r);
  return out;
}

std::vector<Index> omega1_basis(const GroupTable& G, std::uint32_t p) {
  const auto omega = omega1_of_center(G, p);
  std::vector<Index> basis;
  Subgroup span{{G.identity()}};
  for (Index z : omega.subgroup.members) {
    if (span.contains(z)) continue;
    basis.push_back(z);
    span = generated_subgroup(G, basis);
  }
  if (basis.size() != omega.rank) throw VerificationError("omega1_basis: basis size differs from rank");
  return basis;
}

std::vector<std::vector<Index>> conjugacy_classes(const GroupTable& G) {
  const std::size_t n = G.order();
  std::vector<char> assigned(n, 0);
  std::vector<std::vector<Index>> classes;
  const auto orbit = [&](Index x) {
    std::vector<Index> cls;
    for (Index h = 0; h < n; ++h) {
      const Index y = G.conjugate(x, h);
      if (!assigned[y]) {
        assigned[y] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    return cls;
  };
  classes.push_back(orbit(G.identity()));
  for (Index x = 0; x < n; ++x) {
    if (!assigned[x]) classes.push_back(orbit(x));
  }
  return classes;
}

GroupTable direct_product(const GroupTable& A, const GroupTable& B, std::uint64_t seed, std::size_t order_cap) {
  const std::size_t na = A.order(), nb = B.order();
  if (na * nb > order_cap) {
    throw SizeGuardError("direct_product: order " + std::to_string(na * nb) + " exceeds cap " +
                         std::to_string(order_cap));
  }
  const std::size_t n = na * nb;
  std::vector<Index> mult(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Index a = A.mul(static_cast<Index>(x / nb), static_cast<Index>(y / nb));
      const Index b = B.mul(static_cast<Index>(x % nb), static_cast<Index>(y % nb));
      mult[x * n + y] = static_cast<Index>(std::size_t{a} * nb + b);
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    labels[x] = "(" + A.label(static_cast<Index>(x / nb)) + "," + B.label(static_cast<Index>(x % nb)) + ")";
  }
  return {std::move(mult), std::move(labels), seed, order_cap};
}

std::map<std::uint64_t, std::size_t> order_spectrum(const GroupTable& G) {
  std::map<std::uint64_t, std::size_t> spectrum;
  for (Index a = 0; a < G.order(); ++a) ++spectrum[G.element_order(a)];
  return spectrum;
}

QuotientGroup quotient(const GroupTable& G, const Subgroup& N) {
  if (!is_normal(G, N)) throw DomainError("quotient: subgroup is not normal");
  const std::size_t n = G.order();
  constexpr Index kUnset = ~Index{0};
  QuotientGroup q{GroupTable({0}), std::vector<Index>(n, kUnset), {}};
  for (Index g = 0; g < n; ++g) {
    if (q.coset_of[g] != kUnset) continue;
    const auto idx = static_cast<Index>(q.representatives.size());
    q.representatives.push_back(g);  // ascending scan: g is the minimal member
    for (Index h : N.members) q.coset_of[G.mul(g, h)] = idx;
  }
  const std::size_t m = q.representatives.size();
  std::vector<Index> mult(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      mult[a * m + b] = q.coset_of[G.mul(q.representatives[a], q.representatives[b])];
  std::vector<std::string> labels(m);
  for (std::size_t a = 0; a < m; ++a) labels[a] = G.label(q.representatives[a]) + "N";
  q.group = GroupTable(std::move(mult), std::move(labels));
  return q;
}

GroupTable subgroup_table(const GroupTable& G, const Subgroup& H) {
  if (!is_subgroup(G, H)) throw DomainError("subgroup_table: not a subgroup");
  const std::size_t m = H.order();
  std::vector<Index> mult(m * m);
  const auto pos = [&](Index g) {
    return static_cast<Index>(std::lower_bound(H.members.begin(), H.members.end(), g) - H.members.begin());
  };
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) mult[a * m + b] = pos(G.mul(H.members[a], H.members[b]));
  std::vector<std::string> labels(m);
  for (std::size_t a = 0; a < m; ++a) labels[a] = G.label(H.members[a]);
  return {std::move(mult), std::move(labels)};
}

namespace {

constexpr Index kNone = ~Index{0};

std::vector<Index> greedy_generators(const GroupTable& G) {
  std::vector<Index> gens;
  Subgroup h{{G.identity()}};
  for (Index x = 0; x < G.order(); ++x) {
    if (h.contains(x)) continue;
    gens.push_back(x);
    h = generated_subgroup(G, gens);
  }
  return gens;
}

// Extends the generator assignment gens[0..t) -> images[0..t) to the
// subgroup they generate. Returns false if the assignment is not a
// well-defined injective homomorphism on that subgroup.
bool extend_partial(const GroupTable& A, const GroupTable& B, std::span<const Index> gens,
                    std::span<const Index> images, std::vector<Index>& map) {
  map.assign(A.order(), kNone);
  std::vector<char> used(B.order(), 0);
  std::vector<Index> reached{A.identity()};
  map[A.identity()] = B.identity();
  used[B.identity()] = 1;
  for (std::size_t i = 0; i < reached.size(); ++i) {
    const Index a = reached[i];
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const Index x = A.mul(a, gens[g]);
      const Index y = B.mul(map[a], images[g]);
      if (map[x] == kNone) {
        if (used[y]) return false;
        map[x] = y;
        used[y] = 1;
        reached.push_back(x);
      } else if (map[x] != y) {
        return false;
      }
    }
  }
  return true;
}

// Calls visit(map) for every isomorphism A -> B until visit returns true.
// prune(map) may reject partial maps defined on a subgroup of A.
bool for_each_isomorphism(const GroupTable& A, const GroupTable& B,
                          const std::function<bool(const std::vector<Index>&)>& prune,
                          const std::function<bool(const std::vector<Index>&)>& visit) {
  if (A.order() != B.order() || order_spectrum(A) != order_spectrum(B)) return false;
  const auto gens = greedy_generators(A);
  std::vector<std::uint64_t> b_orders(B.order());
  for (Index y = 0; y < B.order(); ++y) b_orders[y] = B.element_order(y);
  std::vector<Index> images(gens.size());
  std::vector<Index> map;

  std::function<bool(std::size_t)> search = [&](std::size_t depth) -> bool {
    if (depth == gens.size()) {
      if (!extend_partial(A, B, gens, images, map)) return false;
      if (std::find(map.begin(), map.end(), kNone) != map.end()) return false;
      return visit(map);
    }
    const std::uint64_t want = A.element_order(gens[depth]);
    for (Index y = 0; y < B.order(); ++y) {
      if (b_orders[y] != want) continue;
      images[depth] = y;
      const std::span<const Index> g_prefix(gens.data(), depth + 1);
      const std::span<const Index> i_prefix(images.data(), depth + 1);
      if (!extend_partial(A, B, g_prefix, i_prefix, map)) continue;
      if (prune && !prune(map)) continue;
      if (search(depth + 1)) return true;
    }
    return false;
  };
  return search(0);
}

}  // namespace

std::optional<std::vector<Index>> detail::find_isomorphism(const GroupTable& A, const GroupTable& B) {
  std::optional<std::vector<Index>> found;
  for_each_isomorphism(A, B, nullptr, [&](const std::vector<Index>& map) {
    found = map;
    return true;
  });
  return found;
}

bool isoclinic(const GroupTable& S, const GroupTable& T, std::size_t guard) {
  const auto zs = center(S), zt = center(T);
  const auto ds = commutator_subgroup(S), dt = commutator_subgroup(T);
  for (std::size_t sz : {S.order() / zs.order(), T.order() / zt.order(), ds.order(), dt.order()}) {
    if (sz > guard) throw SizeGuardError("isoclinic: quotient or commutator subgroup exceeds guard");
  }
  if (S.order() / zs.order() != T.order() / zt.order() || ds.order() != dt.order()) return false;

  const auto qs = quotient(S, zs);
  const auto qt = quotient(T, zt);
  const auto dts = subgroup_table(S, ds);
  const auto dtt = subgroup_table(T, dt);
  if (order_spectrum(dts) != order_spectrum(dtt)) return false;

  const std::size_t q = qs.group.order();
  // Commutators only depend on cosets of the centre.
  std::vector<Index> comm_s(q * q), comm_t(q * q);
  const auto pos = [](const Subgroup& H, Index g) {
    return static_cast<Index>(std::lower_bound(H.members.begin(), H.members.end(), g) - H.members.begin());
  };
  for (Index x = 0; x < q; ++x) {
    for (Index y = 0; y < q; ++y) {
      comm_s[x * q + y] = pos(ds, S.commutator(qs.representatives[x], qs.representatives[y]));
      comm_t[x * q + y] = pos(dt, T.commutator(qt.representatives[x], qt.representatives[y]));
    }
  }

  // Partial commutator correspondence induced by f on its current domain.
  std::vector<Index> g_map;
  const auto commutator_map = [&](const std::vector<Index>& f) {
    g_map.assign(ds.order(), kNone);
    std::vector<Index> back(dt.order(), kNone);
    for (Index x = 0; x < q; ++x) {
      if (f[x] == kNone) continue;
      for (Index y = 0; y < q; ++y) {
        if (f[y] == kNone) continue;
        const Index c = comm_s[x * q + y];
        const Index c2 = comm_t[std::size_t{f[x]} * q + f[y]];
        if (g_map[c] == kNone && back[c2] == kNone) {
          g_map[c] = c2;
          back[c2] = c;
        } else if (g_map[c] != c2 || back[c2] != c) {
          return false;
        }
      }
    }
    return true;
  };

  const auto complete = [&](const std::vector<Index>& f) {
    if (!commutator_map(f)) return false;
    // g is known on all commutators, which generate [S,S]; extend
    // multiplicatively and require a bijective homomorphism.
    std::vector<Index> known;
    for (Index c = 0; c < ds.order(); ++c)
      if (g_map[c] != kNone) known.push_back(c);
    std::vector<Index> gens = known;
    std::vector<Index> images;
    for (Index c : gens) images.push_back(g_map[c]);
    std::vector<Index> full;
    if (!extend_partial(dts, dtt, gens, images, full)) return false;
    return std::find(full.begin(), full.end(), kNone) == full.end();
  };

  return for_each_isomorphism(qs.group, qt.group, commutator_map, complete);
}

GroupTable cyclic_group(std::size_t n, std::size_t order_cap) {
  if (n == 0) throw DomainError("cyclic_group: order must be positive");
  if (n > order_cap) throw SizeGuardError("cyclic_group: order exceeds cap");
  std::vector<Index> mult(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mult[a * n + b] = static_cast<Index>((a + b) % n);
  return {std::move(mult)};
}

GroupTable elementary_abelian(std::uint32_t p, unsigned n, std::size_t order_cap) {
  if (!is_prime(p)) throw DomainError("elementary_abelian: p must be prime");
  const std::uint64_t order = ipow(p, n);
  if (order > order_cap) throw SizeGuardError("elementary_abelian: order exceeds cap");
  const std::size_t m = order;
  std::vector<Index> mult(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      std::size_t x = a, y = b, out = 0, place = 1;
      for (unsigned i = 0; i < n; ++i) {
        out += ((x % p + y % p) % p) * place;
        x /= p;
        y /= p;
        place *= p;
      }
      mult[a * m + b] = static_cast<Index>(out);
    }
  }
  return {std::move(mult)};
}

}  // namespace prdim
