#include "prdim/catalog.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "prdim/errors.hpp"
#include "prdim/modular.hpp"
#include "prdim/rdim.hpp"
#include "prdim/reptheory.hpp"

namespace prdim {

// ---------------------------------------------------------------------------
// parsing

namespace {

class SpecParser {
 public:
  explicit SpecParser(const std::string& text) : s_(text) {}

  GroupSpecExpr parse() {
    auto e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  using Kind = GroupSpecExpr::Kind;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ConstructionError("group spec: " + msg + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a constructor name");
    return s_.substr(start, pos_ - start);
  }

  std::uint64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 9) fail("integer too large");
    return std::stoull(s_.substr(start, pos_ - start));
  }

  std::string path() {
    skip_ws();
    if (pos_ < s_.size() && (s_[pos_] == '"' || s_[pos_] == '\'')) {
      const char quote = s_[pos_++];
      const std::size_t end = s_.find(quote, pos_);
      if (end == std::string::npos) fail("unterminated quoted path");
      std::string out = s_.substr(pos_, end - pos_);
      pos_ = end + 1;
      return out;
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ')') ++pos_;
    std::string out = s_.substr(start, pos_ - start);
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    if (out.empty()) fail("expected a file path");
    return out;
  }

  GroupSpecExpr expr() {
    const std::string name = identifier();
    GroupSpecExpr e;
    if (name == "q8" || name == "d8" || name == "exceptional128") {
      e.kind = name == "q8" ? Kind::q8 : name == "d8" ? Kind::d8 : Kind::exceptional128;
      if (peek('(')) {
        ++pos_;
        expect(')');
      }
      return e;
    }
    expect('(');
    if (name == "heisenberg") {
      e.kind = Kind::heisenberg;
      e.params = {integer(), (expect(','), integer()), (expect(','), integer())};
      if (peek(',')) {
        ++pos_;
        e.path = path();
      }
    } else if (name == "forms") {
      e.kind = Kind::forms;
      e.path = path();
    } else if (name == "elementary") {
      e.kind = Kind::elementary;
      e.params = {integer(), (expect(','), integer())};
    } else if (name == "cyclic") {
      e.kind = Kind::cyclic;
      e.params = {integer()};
    } else if (name == "product") {
      e.kind = Kind::product;
      e.children.push_back(expr());
      expect(',');
      e.children.push_back(expr());
    } else {
      fail("unknown constructor '" + name + "'");
    }
    expect(')');
    return e;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpecExpr parse_group_spec(const std::string& text) { return SpecParser(text).parse(); }

std::string to_string(const GroupSpecExpr& e) {
  using Kind = GroupSpecExpr::Kind;
  switch (e.kind) {
    case Kind::heisenberg: {
      std::string s = "heisenberg(" + std::to_string(e.params[0]) + "," + std::to_string(e.params[1]) + "," +
                      std::to_string(e.params[2]);
      if (!e.path.empty()) s += "," + e.path;
      return s + ")";
    }
    case Kind::forms:
      return "forms(" + e.path + ")";
    case Kind::elementary:
      return "elementary(" + std::to_string(e.params[0]) + "," + std::to_string(e.params[1]) + ")";
    case Kind::cyclic:
      return "cyclic(" + std::to_string(e.params[0]) + ")";
    case Kind::q8:
      return "q8";
    case Kind::d8:
      return "d8";
    case Kind::exceptional128:
      return "exceptional128";
    case Kind::product:
      return "product(" + to_string(e.children[0]) + "," + to_string(e.children[1]) + ")";
  }
  return {};
}

// ---------------------------------------------------------------------------
// named groups

FormSpace exceptional128_forms() {
  std::vector<FqMatrix> gens;
  gens.push_back(FqMatrix(2, {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}));
  gens.push_back(FqMatrix(2, {{0, 0, 1, 0}, {0, 0, 1, 1}, {1, 1, 0, 0}, {0, 1, 0, 0}}));
  gens.push_back(FqMatrix(2, {{0, 0, 1, 1}, {0, 0, 0, 1}, {1, 0, 0, 1}, {1, 1, 1, 0}}));
  return {2, 4, std::move(gens)};
}

HeisenbergSpec exceptional128_spec() { return HeisenbergSpec(exceptional128_forms()); }

GroupTable exceptional128(std::uint64_t seed) { return build_heisenberg(exceptional128_spec(), seed); }

std::uint64_t exceptional128_checksum() {
  std::uint64_t bits = 0;
  const auto K = exceptional128_forms();
  for (const auto& g : K.generators())
    for (auto e : g.entries()) bits = (bits << 1U) | e;
  return bits;
}

BilinearMap exceptional128_alternate_beta() {
  const auto K = exceptional128_forms();
  std::vector<FpVector> sym(16, FpVector(3, 0));
  sym[0] = {1, 0, 0};
  return add_symmetric(K, default_beta(K), sym);
}

namespace {

FormSpace klein_form() { return {2, 2, {FqMatrix(2, {{0, 1}, {1, 0}})}}; }

}  // namespace

HeisenbergSpec quaternion_spec() {
  auto K = klein_form();
  BilinearMap beta(K, {{1}, {1}, {0}, {1}});
  return {std::move(K), std::move(beta)};
}

HeisenbergSpec dihedral_spec() {
  auto K = klein_form();
  BilinearMap beta(K, {{0}, {1}, {0}, {0}});
  return {std::move(K), std::move(beta)};
}

// ---------------------------------------------------------------------------
// building

namespace {

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConstructionError("cannot open '" + path + "'");
  return in;
}

// Nodes an external beta file may apply to.
std::size_t count_beta_targets(const GroupSpecExpr& e) {
  using Kind = GroupSpecExpr::Kind;
  std::size_t n = (e.kind == Kind::heisenberg && e.path.empty()) || e.kind == Kind::forms ? 1 : 0;
  for (const auto& c : e.children) n += count_beta_targets(c);
  return n;
}

std::uint32_t checked_prime(std::uint64_t p) {
  if (p > kMaxPrime || !is_prime(p)) {
    throw DomainError("group spec: " + std::to_string(p) + " is not a prime <= " + std::to_string(kMaxPrime));
  }
  return static_cast<std::uint32_t>(p);
}

BuiltGroup build(const GroupSpecExpr& e, const BuildOptions& opt, const std::optional<std::string>& beta_file) {
  using Kind = GroupSpecExpr::Kind;
  switch (e.kind) {
    case Kind::heisenberg: {
      const std::uint32_t p = checked_prime(e.params[0]);
      const std::uint64_t d = e.params[1], k = e.params[2];
      if (d + k > 64 || ipow(p, static_cast<unsigned>(d + k)) > opt.order_cap) {
        throw SizeGuardError("heisenberg(" + std::to_string(p) + "," + std::to_string(d) + "," + std::to_string(k) +
                             "): order exceeds cap " + std::to_string(opt.order_cap));
      }
      auto K = symplectic_subspace(p, d, k);
      const std::string file = !e.path.empty() ? e.path : beta_file.value_or("");
      if (file.empty()) {
        HeisenbergSpec spec(std::move(K));
        auto G = build_heisenberg(spec, opt.seed, opt.order_cap);
        return {std::move(G), std::move(spec)};
      }
      auto in = open_file(file);
      auto beta = parse_beta(in, K);
      HeisenbergSpec spec(std::move(K), std::move(beta));
      auto G = build_heisenberg(spec, opt.seed, opt.order_cap);
      return {std::move(G), std::move(spec)};
    }
    case Kind::forms: {
      auto in = open_file(e.path);
      auto K = parse_form_space(in);
      const std::streampos mark = in.tellg();
      bool has_beta = false;
      for (std::string line; std::getline(in, line);) {
        if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
          has_beta = true;
          break;
        }
      }
      std::optional<HeisenbergSpec> spec;
      if (has_beta && beta_file) throw ConstructionError("forms: " + e.path + " already has a beta block");
      if (has_beta) {
        in.clear();
        in.seekg(mark);
        auto beta = parse_beta(in, K);
        spec.emplace(std::move(K), std::move(beta));
      } else if (beta_file) {
        auto bin = open_file(*beta_file);
        auto beta = parse_beta(bin, K);
        spec.emplace(std::move(K), std::move(beta));
      } else {
        spec.emplace(std::move(K));
      }
      if (spec->order() > opt.order_cap) throw SizeGuardError("forms: order exceeds cap");
      auto G = build_heisenberg(*spec, opt.seed, opt.order_cap);
      return {std::move(G), std::move(spec)};
    }
    case Kind::elementary: {
      const std::uint32_t p = checked_prime(e.params[0]);
      if (e.params[1] == 0 || e.params[1] > 64) throw DomainError("elementary: n must be in [1, 64]");
      return {elementary_abelian(p, static_cast<unsigned>(e.params[1]), opt.order_cap), std::nullopt};
    }
    case Kind::cyclic:
      if (e.params[0] > opt.order_cap) throw SizeGuardError("cyclic: order exceeds cap");
      return {cyclic_group(e.params[0], opt.order_cap), std::nullopt};
    case Kind::q8: {
      auto spec = quaternion_spec();
      auto G = build_heisenberg(spec, opt.seed, opt.order_cap);
      return {std::move(G), std::move(spec)};
    }
    case Kind::d8: {
      auto spec = dihedral_spec();
      auto G = build_heisenberg(spec, opt.seed, opt.order_cap);
      return {std::move(G), std::move(spec)};
    }
    case Kind::exceptional128: {
      auto spec = exceptional128_spec();
      auto G = build_heisenberg(spec, opt.seed, opt.order_cap);
      return {std::move(G), std::move(spec)};
    }
    case Kind::product: {
      const auto a = build(e.children[0], opt, beta_file);
      const auto b = build(e.children[1], opt, beta_file);
      return {direct_product(a.group, b.group, opt.seed, opt.order_cap), std::nullopt};
    }
  }
  throw ConstructionError("group spec: unknown constructor");
}

}  // namespace

BuiltGroup build_group(const GroupSpecExpr& expr, const BuildOptions& options) {
  if (options.beta_file && count_beta_targets(expr) != 1) {
    throw ConstructionError("--beta needs exactly one heisenberg(...) or forms(...) node without its own beta");
  }
  return build(expr, options, options.beta_file);
}

BuiltGroup build_group(const std::string& text, const BuildOptions& options) {
  return build_group(parse_group_spec(text), options);
}

// ---------------------------------------------------------------------------
// theorem table

unsigned theorem_n_cap(std::uint32_t p) {
  switch (p) {
    case 2:
      return 7;
    case 3:
      return 5;
    case 5:
      return 4;
    case 7:
      return 3;
    default:
      break;
  }
  unsigned n = 0;
  while (n < 3 && ipow(p, n + 1) <= kDefaultOrderCap) ++n;
  return n;
}

GroupSpecExpr witness_for(std::uint32_t p, unsigned n) {
  if (!is_prime(p) || p > kMaxPrime) throw DomainError("witness_for: p must be a prime <= 31");
  if (n == 0 || n > theorem_n_cap(p)) {
    throw SizeGuardError("witness_for: (" + std::to_string(p) + "," + std::to_string(n) + ") is outside the caps");
  }
  const auto lit = [](const std::string& s) { return parse_group_spec(s); };
  const std::string ps = std::to_string(p);
  if (n <= 2 || (p == 2 && (n == 3 || n == 4 || n == 5))) {
    return lit("elementary(" + ps + "," + std::to_string(n) + ")");
  }
  if (p == 2 && n == 7) return lit("exceptional128");
  if (p != 2 && n == 4) return lit("product(cyclic(" + ps + "),heisenberg(" + ps + ",2,1))");
  if (n % 2 == 0) return lit("heisenberg(" + ps + "," + std::to_string(n - 2) + ",2)");
  if (p != 2) return lit("heisenberg(" + ps + "," + std::to_string(n - 1) + ",1)");
  return lit("heisenberg(2," + std::to_string(n - 3) + ",3)");
}

std::uint64_t claimed_maximum(std::uint32_t p, unsigned n) {
  if (p == 2 && n == 5) return 5;
  if (p == 2 && n == 7) return 10;
  if (p != 2 && n == 4) return p + 1;
  return f_p(n, p);
}

namespace {

TheoremReport run_row(std::uint32_t p, unsigned n, const BuildOptions& options) {
  TheoremReport row;
  row.p = p;
  row.n = n;
  try {
    row.claimed = claimed_maximum(p, n);
    row.fp = f_p(n, p);
    const auto expr = witness_for(p, n);
    row.witness = to_string(expr);
    const auto built = build_group(expr, BuildOptions{options.seed, options.order_cap, std::nullopt});
    const auto& G = built.group;
    if (G.order() != ipow(p, n)) throw VerificationError("witness has the wrong order");
    const auto table = character_table(G, options.order_cap);
    const auto greedy = min_faithful_dim(G, p, table);
    row.computed = greedy.value;
    const std::size_t r = omega1_of_center(G, p).rank;
    row.eq2 = rdim_upper_bound(n, static_cast<unsigned>(r), p);
    try {
      const auto brute = min_faithful_dim_bruteforce(G, p, table);
      if (brute.value != greedy.value) throw VerificationError("greedy and brute-force solvers disagree");
    } catch (const SizeGuardError&) {
      // oracle out of range for this row; greedy result is still verified by kernels
    }
    if (row.computed > row.eq2) throw VerificationError("rdim exceeds r p^floor((n-r)/2)");
    if (const auto b = center_index_bound(G, p); b && row.computed > *b) {
      throw VerificationError("rdim exceeds 1 + (r-1) sqrt([G:Z(G)])");
    }
    row.pass = row.computed == row.claimed;
  } catch (const std::exception& ex) {
    row.error = ex.what();
    row.pass = false;
  }
  return row;
}

}  // namespace

std::vector<TheoremReport> theorem_table(std::uint32_t p, unsigned n_max, const BuildOptions& options) {
  if (!is_prime(p) || p > kMaxPrime) throw DomainError("theorem_table: p must be a prime <= 31");
  if (n_max > theorem_n_cap(p)) {
    throw SizeGuardError("theorem_table: n_max " + std::to_string(n_max) + " exceeds cap " +
                         std::to_string(theorem_n_cap(p)) + " for p = " + std::to_string(p));
  }
  std::vector<TheoremReport> rows;
  for (unsigned n = 1; n <= n_max; ++n) rows.push_back(run_row(p, n, options));
  return rows;
}

}  // namespace prdim
