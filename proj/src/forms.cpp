#include "prdim/forms.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "prdim/errors.hpp"

namespace prdim {

bool is_alternating(const FqMatrix& m) {
  if (!m.is_square()) return false;
  const std::uint32_t p = m.modulus();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, i) != 0) return false;
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      if ((m(i, j) + m(j, i)) % p != 0) return false;
    }
  }
  return true;
}

FormSpace::FormSpace(std::uint32_t p, std::size_t d, std::vector<FqMatrix> generators)
    : p_(p), d_(d), generators_(std::move(generators)) {
  check_field_prime(p);
  if (d == 0) throw ConstructionError("FormSpace: dim V must be positive");
  if (generators_.empty()) throw ConstructionError("FormSpace: at least one generator required");
  FqMatrix flat(p, generators_.size(), d * d);
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    const auto& m = generators_[g];
    if (m.modulus() != p || m.rows() != d || m.cols() != d) {
      throw DimensionError("FormSpace: generator " + std::to_string(g) + " is not a " + std::to_string(d) + "x" +
                           std::to_string(d) + " matrix over F_" + std::to_string(p));
    }
    if (!is_alternating(m)) {
      throw ConstructionError("FormSpace: generator " + std::to_string(g) + " is not alternating");
    }
    for (std::size_t e = 0; e < d * d; ++e) flat.set(g, e, m.entries()[e]);
  }
  if (rank(flat) != generators_.size()) throw ConstructionError("FormSpace: generators are linearly dependent");
}

FqMatrix FormSpace::combination(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != generators_.size()) throw DimensionError("FormSpace::combination: wrong coefficient count");
  FqMatrix out(p_, d_, d_);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] % p_ != 0) out = out + generators_[i].scaled(coeffs[i] % p_);
  }
  return out;
}

FpVector omega_eval(const FormSpace& K, std::span<const std::uint32_t> v, std::span<const std::uint32_t> w) {
  const std::size_t d = K.dim_v();
  if (v.size() != d || w.size() != d) throw DimensionError("omega_eval: vector length does not match dim V");
  const std::uint64_t p = K.p();
  FpVector out(K.dim_k(), 0);
  for (std::size_t g = 0; g < K.dim_k(); ++g) {
    const auto& m = K.generators()[g];
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (v[i] % p == 0) continue;
      std::uint64_t row = 0;
      for (std::size_t j = 0; j < d; ++j) row += std::uint64_t{m(i, j)} * (w[j] % p);
      acc += (v[i] % p) * (row % p);
    }
    out[g] = static_cast<std::uint32_t>(acc % p);
  }
  return out;
}

std::uint64_t degenerate_census(const FormSpace& K, std::uint64_t cap) {
  const std::uint64_t total = ipow(K.p(), static_cast<unsigned>(K.dim_k()));
  if (total > cap) {
    throw SizeGuardError("degenerate_census: p^k = " + std::to_string(total) + " exceeds cap " + std::to_string(cap));
  }
  std::uint64_t degenerate = 0;
  FpVector c(K.dim_k(), 0);
  for (std::uint64_t n = 1; n < total; ++n) {
    std::uint64_t x = n;
    for (auto& ci : c) {
      ci = static_cast<std::uint32_t>(x % K.p());
      x /= K.p();
    }
    if (det(K.combination(c)).is_zero()) ++degenerate;
  }
  return degenerate;
}

FormSpace build_symplectic(std::uint32_t p, unsigned m) {
  const auto ws = regular_embedding(find_irreducible(p, m));
  std::vector<FqMatrix> gens;
  gens.reserve(m);
  for (const auto& w : ws) {
    FqMatrix f(p, 2 * m, 2 * m);
    for (unsigned r = 0; r < m; ++r) {
      for (unsigned c = 0; c < m; ++c) {
        f.set(r, m + c, w(r, c));
        f.set(m + c, r, -static_cast<std::int64_t>(w(r, c)));
      }
    }
    gens.push_back(std::move(f));
  }
  return {p, 2 * std::size_t{m}, std::move(gens)};
}

FormSpace symplectic_subspace(std::uint32_t p, std::size_t d, std::size_t k) {
  if (d % 2 != 0) {
    throw DomainError("no nontrivial symplectic subspace exists for odd dim V = " + std::to_string(d));
  }
  if (k == 0 || k > d / 2) {
    throw DomainError("symplectic subspace construction needs 1 <= dim K <= dim V / 2 (got dim V = " +
                      std::to_string(d) + ", dim K = " + std::to_string(k) + ")");
  }
  const FormSpace full = build_symplectic(p, static_cast<unsigned>(d / 2));
  std::vector<FqMatrix> gens(full.generators().begin(), full.generators().begin() + static_cast<std::ptrdiff_t>(k));
  return {p, d, std::move(gens)};
}

// ---------------------------------------------------------------------------
// BilinearMap

BilinearMap::BilinearMap(const FormSpace& K, std::vector<FpVector> table)
    : p_(K.p()), d_(K.dim_v()), k_(K.dim_k()), table_(std::move(table)) {
  if (table_.size() != d_ * d_) throw DimensionError("BilinearMap: table must have d*d entries");
  for (auto& entry : table_) {
    if (entry.size() != k_) throw DimensionError("BilinearMap: each entry must have k coordinates");
    for (auto& c : entry) c %= p_;
  }
  for (std::size_t i = 0; i < d_; ++i) {
    for (std::size_t j = 0; j < d_; ++j) {
      for (std::size_t g = 0; g < k_; ++g) {
        const std::uint32_t lhs = (at(i, j)[g] + p_ - at(j, i)[g]) % p_;
        if (lhs != K.generators()[g](i, j)) {
          throw ConstructionError("BilinearMap: beta(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) +
                                  ") - beta(e" + std::to_string(j + 1) + ",e" + std::to_string(i + 1) +
                                  ") does not match omega_K");
        }
      }
    }
  }
}

FpVector BilinearMap::operator()(std::span<const std::uint32_t> v, std::span<const std::uint32_t> w) const {
  if (v.size() != d_ || w.size() != d_) throw DimensionError("BilinearMap: vector length does not match dim V");
  std::vector<std::uint64_t> acc(k_, 0);
  for (std::size_t i = 0; i < d_; ++i) {
    if (v[i] % p_ == 0) continue;
    for (std::size_t j = 0; j < d_; ++j) {
      const std::uint64_t s = std::uint64_t{v[i] % p_} * (w[j] % p_) % p_;
      if (s == 0) continue;
      const auto& e = at(i, j);
      for (std::size_t g = 0; g < k_; ++g) acc[g] += s * e[g];
    }
  }
  FpVector out(k_);
  for (std::size_t g = 0; g < k_; ++g) out[g] = static_cast<std::uint32_t>(acc[g] % p_);
  return out;
}

BilinearMap default_beta(const FormSpace& K) {
  const std::size_t d = K.dim_v();
  std::vector<FpVector> table(d * d, FpVector(K.dim_k(), 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < i; ++j)
      for (std::size_t g = 0; g < K.dim_k(); ++g) table[i * d + j][g] = K.generators()[g](i, j);
  return {K, std::move(table)};
}

BilinearMap half_omega_beta(const FormSpace& K) {
  if (K.p() == 2) throw DomainError("half_omega_beta: omega/2 needs odd characteristic");
  const std::uint64_t half = inv_mod(2, K.p());
  const std::size_t d = K.dim_v();
  std::vector<FpVector> table(d * d, FpVector(K.dim_k(), 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t g = 0; g < K.dim_k(); ++g)
        table[i * d + j][g] = static_cast<std::uint32_t>(K.generators()[g](i, j) * half % K.p());
  return {K, std::move(table)};
}

BilinearMap add_symmetric(const FormSpace& K, const BilinearMap& beta, const std::vector<FpVector>& symmetric) {
  const std::size_t d = K.dim_v();
  if (symmetric.size() != d * d) throw DimensionError("add_symmetric: table must have d*d entries");
  std::vector<FpVector> table = beta.table();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const auto& s = symmetric[i * d + j];
      if (s.size() != K.dim_k()) throw DimensionError("add_symmetric: entry has wrong length");
      if (s != symmetric[j * d + i]) throw DomainError("add_symmetric: table is not symmetric");
      for (std::size_t g = 0; g < K.dim_k(); ++g) table[i * d + j][g] = (table[i * d + j][g] + s[g]) % K.p();
    }
  }
  return {K, std::move(table)};
}

// ---------------------------------------------------------------------------
// text formats

namespace {

bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

std::uint32_t parse_uint(const std::string& tok, const char* what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
    throw ConstructionError(std::string(what) + ": expected a non-negative integer, got '" + tok + "'");
  }
  return static_cast<std::uint32_t>(std::stoul(tok));
}

int digit_value(char ch) {
  if (ch >= '0' && ch <= '9') return ch - '0';
  if (ch >= 'a' && ch <= 'z') return ch - 'a' + 10;
  if (ch >= 'A' && ch <= 'Z') return ch - 'A' + 10;
  return -1;
}

char digit_char(std::uint32_t v) { return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10); }

}  // namespace

FormSpace parse_form_space(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw ConstructionError("form space: missing 'p d k' header");
  const auto header = split_ws(line);
  if (header.size() != 3) throw ConstructionError("form space: header must be 'p d k'");
  const std::uint32_t p = parse_uint(header[0], "form space header");
  const std::size_t d = parse_uint(header[1], "form space header");
  const std::size_t k = parse_uint(header[2], "form space header");
  check_field_prime(p);
  std::vector<FqMatrix> gens;
  for (std::size_t g = 0; g < k; ++g) {
    FqMatrix m(p, d, d);
    for (std::size_t r = 0; r < d; ++r) {
      if (!next_content_line(in, line)) throw ConstructionError("form space: truncated generator block");
      const auto toks = split_ws(line);
      if (toks.size() != d) {
        throw DimensionError("form space: generator " + std::to_string(g + 1) + " row " + std::to_string(r + 1) +
                             " has " + std::to_string(toks.size()) + " entries, expected " + std::to_string(d));
      }
      for (std::size_t c = 0; c < d; ++c) {
        const std::uint32_t v = parse_uint(toks[c], "form space entry");
        if (v >= p) throw ConstructionError("form space: entry " + toks[c] + " is not in [0, p)");
        m.set(r, c, v);
      }
    }
    gens.push_back(std::move(m));
  }
  return {p, d, std::move(gens)};
}

BilinearMap parse_beta(std::istream& in, const FormSpace& K) {
  const std::size_t d = K.dim_v();
  const std::size_t k = K.dim_k();
  std::vector<FpVector> table;
  table.reserve(d * d);
  std::string line;
  for (std::size_t r = 0; r < d; ++r) {
    if (!next_content_line(in, line)) throw ConstructionError("beta table: expected " + std::to_string(d) + " rows");
    const auto toks = split_ws(line);
    if (toks.size() != d) {
      throw DimensionError("beta table: row " + std::to_string(r + 1) + " has " + std::to_string(toks.size()) +
                           " entries, expected " + std::to_string(d));
    }
    for (const auto& tok : toks) {
      if (tok.size() != k) {
        throw DimensionError("beta table: entry '" + tok + "' must have " + std::to_string(k) + " digits");
      }
      FpVector entry(k);
      for (std::size_t g = 0; g < k; ++g) {
        const int v = digit_value(tok[g]);
        if (v < 0 || static_cast<std::uint32_t>(v) >= K.p()) {
          throw ConstructionError("beta table: invalid digit in '" + tok + "'");
        }
        entry[g] = static_cast<std::uint32_t>(v);
      }
      table.push_back(std::move(entry));
    }
  }
  return {K, std::move(table)};
}

void write_form_space(std::ostream& out, const FormSpace& K) {
  out << K.p() << ' ' << K.dim_v() << ' ' << K.dim_k() << '\n';
  for (const auto& g : K.generators()) out << '\n' << g;
}

void write_beta(std::ostream& out, const BilinearMap& beta) {
  for (std::size_t i = 0; i < beta.dim_v(); ++i) {
    for (std::size_t j = 0; j < beta.dim_v(); ++j) {
      if (j) out << ' ';
      for (auto c : beta.at(i, j)) out << digit_char(c);
    }
    out << '\n';
  }
}

}  // namespace prdim
