#pragma once

// JSON / CSV / text emission for tables and reports.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "prdim/catalog.hpp"
#include "prdim/groups.hpp"
#include "prdim/rdim.hpp"
#include "prdim/reptheory.hpp"

namespace prdim {

// "m0,m1,...|e"
std::string render_multiplicities(const Multiplicities& m);

// Header row "irreducible,degree,<class representative labels...>", then one
// row per irreducible; cells are quoted renderings of the multiplicities.
void write_character_table_csv(std::ostream& out, const CharacterTable& t);
nlohmann::json character_table_json(const CharacterTable& t);

// {"value","witness_degrees","central_vectors","method"} plus "witness".
nlohmann::json rdim_json(const RdimResult& r);

// {"p","n","claimed","computed","witness","pass","bounds":{"fp","eq2"}}; a
// failed pipeline adds "error".
nlohmann::json theorem_report_json(const TheoremReport& r);
void write_theorem_reports_text(std::ostream& out, const std::vector<TheoremReport>& rows);

nlohmann::json group_summary_json(const GroupTable& G);

}  // namespace prdim
