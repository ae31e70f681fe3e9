#include "prdim/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "prdim/heisenberg.hpp"
#include "prdim/modular.hpp"

namespace prdim {

std::string render_multiplicities(const Multiplicities& m) {
  std::string s;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(m[j]);
  }
  return s + "|" + std::to_string(m.size());
}

void write_character_table_csv(std::ostream& out, const CharacterTable& t) {
  out << "irreducible,degree";
  for (const auto& c : t.classes()) out << ",\"" << t.group().label(c.representative) << '"';
  out << '\n';
  for (std::size_t i = 0; i < t.num_irreducibles(); ++i) {
    out << i << ',' << t.degree(i);
    for (std::size_t c = 0; c < t.num_classes(); ++c) out << ",\"" << render_multiplicities(t.value(i, c)) << '"';
    out << '\n';
  }
}

nlohmann::json character_table_json(const CharacterTable& t) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : t.classes()) {
    classes.push_back({{"representative", c.representative},
                       {"label", t.group().label(c.representative)},
                       {"size", c.size},
                       {"element_order", c.element_order}});
  }
  nlohmann::json chars = nlohmann::json::array();
  for (std::size_t i = 0; i < t.num_irreducibles(); ++i) {
    nlohmann::json values = nlohmann::json::array();
    for (std::size_t c = 0; c < t.num_classes(); ++c) values.push_back(t.value(i, c));
    chars.push_back({{"index", i}, {"degree", t.degree(i)}, {"values", values}});
  }
  return {{"order", t.group().order()},
          {"exponent", t.exponent()},
          {"modular_prime", t.ell()},
          {"root_of_unity", t.root()},
          {"classes", classes},
          {"characters", chars}};
}

nlohmann::json rdim_json(const RdimResult& r) {
  nlohmann::json vectors = nlohmann::json::array();
  for (const auto& v : r.central_vectors) vectors.push_back(v.vector);
  return {{"value", r.value},
          {"witness", r.witness},
          {"witness_degrees", r.witness_degrees},
          {"central_vectors", vectors},
          {"method", to_string(r.method)}};
}

nlohmann::json theorem_report_json(const TheoremReport& r) {
  nlohmann::json j = {{"p", r.p},
                      {"n", r.n},
                      {"claimed", r.claimed},
                      {"computed", r.computed},
                      {"witness", r.witness},
                      {"pass", r.pass},
                      {"bounds", {{"fp", r.fp}, {"eq2", r.eq2}}}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

void write_theorem_reports_text(std::ostream& out, const std::vector<TheoremReport>& rows) {
  out << std::left << std::setw(4) << "p" << std::setw(4) << "n" << std::setw(9) << "claimed" << std::setw(10)
      << "computed" << std::setw(6) << "f_p" << std::setw(6) << "eq2" << std::setw(6) << "pass"
      << "witness\n";
  for (const auto& r : rows) {
    out << std::setw(4) << r.p << std::setw(4) << r.n << std::setw(9) << r.claimed << std::setw(10) << r.computed
        << std::setw(6) << r.fp << std::setw(6) << r.eq2 << std::setw(6) << (r.pass ? "yes" : "NO") << r.witness;
    if (!r.error.empty()) out << "  [error: " << r.error << "]";
    out << '\n';
  }
  out << kMaximalityNote << '\n';
}

nlohmann::json group_summary_json(const GroupTable& G) {
  const auto z = center(G);
  const auto d = commutator_subgroup(G);
  nlohmann::json j = {{"order", G.order()},
                      {"abelian", is_abelian(G)},
                      {"center_order", z.order()},
                      {"commutator_order", d.order()},
                      {"conjugacy_classes", conjugacy_classes(G).size()}};
  const auto p = smallest_prime_factor(G.order());
  if (p != 0 && p_power_exponent(G.order(), p) > 0) {
    j["p"] = p;
    j["omega1_rank"] = omega1_of_center(G, static_cast<std::uint32_t>(p)).rank;
    j["special"] = is_abelian(G) ? false : verify_special(G);
  } else {
    j["p"] = nullptr;
    j["omega1_rank"] = nullptr;
    j["special"] = false;
  }
  return j;
}

}  // namespace prdim
