#include "prdim/reptheory.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "prdim/errors.hpp"
#include "prdim/modular.hpp"

namespace prdim {

CharacterTable::CharacterTable(GroupTable group, std::vector<std::vector<Index>> class_members,
                               std::vector<ClassInfo> classes, std::vector<std::size_t> class_of, unsigned exponent,
                               std::uint64_t ell, std::uint64_t root, std::vector<std::vector<Multiplicities>> values)
    : group_(std::move(group)),
      class_members_(std::move(class_members)),
      classes_(std::move(classes)),
      class_of_(std::move(class_of)),
      exponent_(exponent),
      ell_(ell),
      root_(root),
      values_(std::move(values)) {}

std::uint32_t CharacterTable::degree(std::size_t irr) const {
  const auto& v = values_[irr][0];
  return std::accumulate(v.begin(), v.end(), std::uint32_t{0});
}

CyclotomicInteger CharacterTable::cyclotomic_value(std::size_t irr, std::size_t cls) const {
  const auto& m = values_[irr][cls];
  return {exponent_, std::vector<std::int64_t>(m.begin(), m.end())};
}

unsigned group_exponent(const GroupTable& G) {
  std::uint64_t e = 1;
  for (Index g = 0; g < G.order(); ++g) e = std::lcm(e, G.element_order(g));
  return static_cast<unsigned>(e);
}

std::uint64_t choose_modular_prime(unsigned e, std::size_t order) {
  for (std::uint64_t l = e + 1;; l += e) {
    if (l * l > 4 * std::uint64_t{order} && is_prime(l)) return l;
  }
}

std::uint64_t smallest_primitive_root_of_unity(unsigned e, std::uint64_t l) {
  if ((l - 1) % e != 0) throw DomainError("no primitive e-th root of unity modulo l");
  if (e == 1) return 1;
  const auto factors = prime_factors(e);
  for (std::uint64_t g = 2; g < l; ++g) {
    if (pow_mod(g, e, l) != 1) continue;
    bool primitive = true;
    for (auto q : factors) primitive = primitive && pow_mod(g, e / q, l) != 1;
    if (primitive) return g;
  }
  throw VerificationError("no primitive root of unity found");
}

namespace {

// Dense matrices over F_l, row-major.
struct ModMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint64_t> a;
  std::uint64_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(ModMatrix& m, std::uint64_t l) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t piv = row;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != row)
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(row, c));
    const std::uint64_t inv = inv_mod(m.at(row, col), l);
    for (std::size_t c = 0; c < m.cols; ++c) m.at(row, c) = m.at(row, c) * inv % l;
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const std::uint64_t f = l - m.at(r, col);
      for (std::size_t c = col; c < m.cols; ++c) m.at(r, c) = (m.at(r, c) + f * m.at(row, c)) % l;
    }
    pivots.push_back(col);
    ++row;
  }
  m.a.resize(row * m.cols);
  m.rows = row;
  return pivots;
}

// Basis of {x : A x = 0} as rows.
std::vector<std::vector<std::uint64_t>> nullspace(ModMatrix A, std::uint64_t l) {
  const auto pivots = rref(A, l);
  std::vector<char> is_pivot(A.cols, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t free = 0; free < A.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> x(A.cols, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = (l - A.at(r, free)) % l;
    basis.push_back(std::move(x));
  }
  return basis;
}

struct Subspace {
  ModMatrix basis;  // rows in RREF
  std::vector<std::size_t> pivots;
};

class EigenSplitter {
 public:
  EigenSplitter(const std::vector<ModMatrix>& class_matrices, std::uint64_t l) : mats_(class_matrices), l_(l) {}

  void split(Subspace space, std::vector<std::vector<std::uint64_t>>& out) const {
    const std::size_t d = space.basis.rows;
    if (d == 1) {
      out.emplace_back(space.basis.a.begin(), space.basis.a.end());
      return;
    }
    for (std::size_t i = 1; i < mats_.size(); ++i) {
      const ModMatrix r = restrict_to(mats_[i], space);
      if (is_scalar(r)) continue;
      std::size_t found = 0;
      for (std::uint64_t lambda = 0; lambda < l_ && found < d; ++lambda) {
        ModMatrix shifted = r;
        for (std::size_t t = 0; t < d; ++t) shifted.at(t, t) = (shifted.at(t, t) + l_ - lambda) % l_;
        const auto null = nullspace(shifted, l_);
        if (null.empty()) continue;
        found += null.size();
        Subspace sub;
        sub.basis.rows = null.size();
        sub.basis.cols = space.basis.cols;
        sub.basis.a.assign(sub.basis.rows * sub.basis.cols, 0);
        for (std::size_t v = 0; v < null.size(); ++v)
          for (std::size_t s = 0; s < d; ++s) {
            if (null[v][s] == 0) continue;
            for (std::size_t c = 0; c < sub.basis.cols; ++c)
              sub.basis.at(v, c) = (sub.basis.at(v, c) + null[v][s] * space.basis.at(s, c)) % l_;
          }
        sub.pivots = rref(sub.basis, l_);
        split(std::move(sub), out);
      }
      if (found != d) {
        throw VerificationError("character_table: class matrix is not diagonalizable over F_" + std::to_string(l_));
      }
      return;
    }
    throw VerificationError("character_table: class matrices fail to separate a common eigenspace");
  }

 private:
  // Matrix of M on span(rows of space.basis), column vectors M b_s written in
  // that basis; coordinates are read off at the pivot columns.
  ModMatrix restrict_to(const ModMatrix& M, const Subspace& space) const {
    const std::size_t d = space.basis.rows, k = space.basis.cols;
    ModMatrix r{d, d, std::vector<std::uint64_t>(d * d, 0)};
    std::vector<std::uint64_t> u(k);
    for (std::size_t s = 0; s < d; ++s) {
      for (std::size_t j = 0; j < k; ++j) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < k; ++c) acc += M.at(j, c) * space.basis.at(s, c) % l_;
        u[j] = acc % l_;
      }
      for (std::size_t t = 0; t < d; ++t) r.at(t, s) = u[space.pivots[t]];
      for (std::size_t j = 0; j < k; ++j) {
        std::uint64_t acc = 0;
        for (std::size_t t = 0; t < d; ++t) acc += r.at(t, s) * space.basis.at(t, j) % l_;
        if (acc % l_ != u[j]) throw VerificationError("character_table: subspace is not invariant");
      }
    }
    return r;
  }

  static bool is_scalar(const ModMatrix& r) {
    for (std::size_t i = 0; i < r.rows; ++i)
      for (std::size_t j = 0; j < r.cols; ++j)
        if (i != j ? r.at(i, j) != 0 : r.at(i, i) != r.at(0, 0)) return false;
    return true;
  }

  const std::vector<ModMatrix>& mats_;
  std::uint64_t l_;
};

// Sparse view of a multiplicity vector.
using Sparse = std::vector<std::pair<unsigned, std::int64_t>>;

Sparse sparse(const Multiplicities& m) {
  Sparse s;
  for (unsigned j = 0; j < m.size(); ++j)
    if (m[j]) s.emplace_back(j, m[j]);
  return s;
}

// sum_c weight_c * x_c * conj(y_c) accumulated in Z[x]/(x^e - 1), minus target.
bool inner_product_equals(const std::vector<const Sparse*>& xs, const std::vector<const Sparse*>& ys,
                          const std::vector<std::int64_t>& weights, unsigned e, std::int64_t target) {
  std::vector<std::int64_t> acc(e, 0);
  for (std::size_t c = 0; c < xs.size(); ++c) {
    for (const auto& [i, a] : *xs[c])
      for (const auto& [j, b] : *ys[c]) acc[(i + e - j) % e] += weights[c] * a * b;
  }
  acc[0] -= target;
  return CyclotomicInteger(e, std::move(acc)).is_zero();
}

}  // namespace

CharacterTable character_table(const GroupTable& G, std::size_t order_cap) {
  const std::size_t n = G.order();
  if (n > order_cap) {
    throw SizeGuardError("character_table: order " + std::to_string(n) + " exceeds cap " + std::to_string(order_cap));
  }
  auto members = conjugacy_classes(G);
  const std::size_t k = members.size();
  std::vector<std::size_t> class_of(n);
  for (std::size_t c = 0; c < k; ++c)
    for (Index g : members[c]) class_of[g] = c;
  std::vector<ClassInfo> classes(k);
  for (std::size_t c = 0; c < k; ++c) {
    classes[c].representative = members[c].front();
    classes[c].size = members[c].size();
    classes[c].element_order = G.element_order(members[c].front());
    classes[c].inverse_class = class_of[G.inv(members[c].front())];
  }

  const unsigned e = group_exponent(G);
  const std::uint64_t l = choose_modular_prime(e, n);
  const std::uint64_t z = smallest_primitive_root_of_unity(e, l);

  // (M_i)_{j,c} = #{x in C_i : x^-1 g_c in C_j}, so M_i w = omega(C_i) w for
  // every central character w.
  std::vector<ModMatrix> mats(k, ModMatrix{k, k, std::vector<std::uint64_t>(k * k, 0)});
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < k; ++c)
      for (Index x : members[i]) ++mats[i].at(class_of[G.mul(G.inv(x), classes[c].representative)], c);

  Subspace whole{ModMatrix{k, k, std::vector<std::uint64_t>(k * k, 0)}, {}};
  for (std::size_t i = 0; i < k; ++i) {
    whole.basis.at(i, i) = 1;
    whole.pivots.push_back(i);
  }
  std::vector<std::vector<std::uint64_t>> eigvecs;
  EigenSplitter(mats, l).split(std::move(whole), eigvecs);
  if (eigvecs.size() != k) throw VerificationError("character_table: wrong number of central characters");

  // Power maps: class of g_c^s.
  std::vector<std::vector<std::size_t>> power_class(k);
  for (std::size_t c = 0; c < k; ++c) {
    const auto o = classes[c].element_order;
    Index x = G.identity();
    for (std::uint64_t s = 0; s < o; ++s) {
      power_class[c].push_back(class_of[x]);
      x = G.mul(x, classes[c].representative);
    }
  }

  std::vector<std::vector<Multiplicities>> values;
  values.reserve(k);
  const std::uint64_t max_degree = isqrt(n);
  for (auto& w : eigvecs) {
    const std::uint64_t w0inv = inv_mod(w[0], l);
    for (auto& x : w) x = x * w0inv % l;
    // sum_c omega_c omega_{c*} / |C_c| = |G| / chi(1)^2
    std::uint64_t s = 0;
    for (std::size_t c = 0; c < k; ++c) {
      s = (s + w[c] * w[classes[c].inverse_class] % l * inv_mod(classes[c].size, l)) % l;
    }
    if (s == 0) throw VerificationError("character_table: degenerate norm");
    const std::uint64_t d2 = n % l * inv_mod(s, l) % l;
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d <= max_degree; ++d) {
      if (d * d % l == d2) {
        if (degree != 0) throw VerificationError("character_table: ambiguous degree");
        degree = d;
      }
    }
    if (degree == 0 || n % degree != 0) throw VerificationError("character_table: degree recovery failed");

    std::vector<std::uint64_t> chi(k);
    for (std::size_t c = 0; c < k; ++c) chi[c] = w[c] * degree % l * inv_mod(classes[c].size, l) % l;

    std::vector<Multiplicities> row(k, Multiplicities(e, 0));
    for (std::size_t c = 0; c < k; ++c) {
      const std::uint64_t o = classes[c].element_order;
      const std::uint64_t zo_inv = inv_mod(pow_mod(z, e / o, l), l);
      const std::uint64_t oinv = inv_mod(o, l);
      std::uint64_t total = 0;
      for (std::uint64_t t = 0; t < o; ++t) {
        const std::uint64_t step = pow_mod(zo_inv, t, l);
        std::uint64_t acc = 0, root_power = 1;
        for (std::uint64_t s2 = 0; s2 < o; ++s2) {
          acc = (acc + chi[power_class[c][s2]] * root_power) % l;
          root_power = root_power * step % l;
        }
        const std::uint64_t mult = acc * oinv % l;
        if (mult > degree) throw VerificationError("character_table: eigenvalue multiplicity out of range");
        row[c][(e / o) * t] = static_cast<std::uint32_t>(mult);
        total += mult;
      }
      if (total != degree) throw VerificationError("character_table: multiplicities do not sum to the degree");
    }
    values.push_back(std::move(row));
  }

  const auto is_trivial = [](const std::vector<Multiplicities>& row) {
    return std::all_of(row.begin(), row.end(), [](const Multiplicities& m) { return m[0] == 1; });
  };
  std::stable_sort(values.begin(), values.end(), [&](const auto& a, const auto& b) {
    const auto da = std::accumulate(a[0].begin(), a[0].end(), 0U);
    const auto db = std::accumulate(b[0].begin(), b[0].end(), 0U);
    if (da != db) return da < db;
    return is_trivial(a) && !is_trivial(b);
  });

  CharacterTable table(G, std::move(members), std::move(classes), std::move(class_of), e, l, z, std::move(values));

  std::uint64_t sum_sq = 0;
  for (std::size_t i = 0; i < table.num_irreducibles(); ++i) sum_sq += std::uint64_t{table.degree(i)} * table.degree(i);
  if (sum_sq != n) throw VerificationError("character_table: sum of squared degrees differs from |G|");
  if (!rows_orthogonal(table)) throw VerificationError("character_table: row orthogonality violated");
  return table;
}

bool rows_orthogonal(const CharacterTable& t) {
  const std::size_t k = t.num_classes();
  std::vector<std::vector<Sparse>> sp(t.num_irreducibles(), std::vector<Sparse>(k));
  for (std::size_t i = 0; i < t.num_irreducibles(); ++i)
    for (std::size_t c = 0; c < k; ++c) sp[i][c] = sparse(t.value(i, c));
  std::vector<std::int64_t> weights(k);
  for (std::size_t c = 0; c < k; ++c) weights[c] = static_cast<std::int64_t>(t.classes()[c].size);
  const auto n = static_cast<std::int64_t>(t.group().order());
  for (std::size_t a = 0; a < t.num_irreducibles(); ++a) {
    for (std::size_t b = a; b < t.num_irreducibles(); ++b) {
      std::vector<const Sparse*> xs(k), ys(k);
      for (std::size_t c = 0; c < k; ++c) {
        xs[c] = &sp[a][c];
        ys[c] = &sp[b][c];
      }
      if (!inner_product_equals(xs, ys, weights, t.exponent(), a == b ? n : 0)) return false;
    }
  }
  return true;
}

bool columns_orthogonal(const CharacterTable& t) {
  const std::size_t k = t.num_classes();
  const std::size_t m = t.num_irreducibles();
  std::vector<std::vector<Sparse>> sp(k, std::vector<Sparse>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t c = 0; c < k; ++c) sp[c][i] = sparse(t.value(i, c));
  const std::vector<std::int64_t> ones(m, 1);
  const auto n = t.group().order();
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t c2 = c; c2 < k; ++c2) {
      std::vector<const Sparse*> xs(m), ys(m);
      for (std::size_t i = 0; i < m; ++i) {
        xs[i] = &sp[c][i];
        ys[i] = &sp[c2][i];
      }
      const auto target = c == c2 ? static_cast<std::int64_t>(n / t.classes()[c].size) : 0;
      if (!inner_product_equals(xs, ys, ones, t.exponent(), target)) return false;
    }
  }
  return true;
}

Subgroup kernel_of(const CharacterTable& t, std::size_t irr) {
  const std::uint32_t deg = t.degree(irr);
  Subgroup ker;
  for (Index g = 0; g < t.group().order(); ++g) {
    if (t.value_at(irr, g)[0] == deg) ker.members.push_back(g);
  }
  if (!is_normal(t.group(), ker)) throw VerificationError("kernel_of: kernel is not a normal subgroup");
  return ker;
}

CentralVector central_vector(const CharacterTable& t, std::size_t irr, const std::vector<Index>& basis,
                             std::uint32_t p) {
  const unsigned e = t.exponent();
  if (e % p != 0) throw DomainError("central_vector: p does not divide the group exponent");
  CentralVector out{irr, {}};
  const std::uint32_t deg = t.degree(irr);
  for (Index z : basis) {
    if (t.classes()[t.class_of(z)].size != 1) {
      throw DomainError("central_vector: basis element " + std::to_string(z) + " is not central");
    }
    if (t.group().pow(z, p) != t.group().identity()) {
      throw DomainError("central_vector: basis element " + std::to_string(z) + " does not have order p");
    }
    const auto& m = t.value_at(irr, z);
    const auto it = std::find_if(m.begin(), m.end(), [](std::uint32_t x) { return x != 0; });
    const auto j = static_cast<unsigned>(it - m.begin());
    if (*it != deg) throw VerificationError("central_vector: central element does not act by a scalar");
    if (j % (e / p) != 0) throw VerificationError("central_vector: scalar is not a p-th root of unity");
    out.vector.push_back(j / (e / p));
  }
  return out;
}

std::map<std::uint32_t, std::size_t> degree_census(const CharacterTable& t) {
  std::map<std::uint32_t, std::size_t> census;
  for (std::size_t i = 0; i < t.num_irreducibles(); ++i) ++census[t.degree(i)];
  return census;
}

}  // namespace prdim
