#pragma once

#include <string>

#include "json.hpp"
#include "qhopf/classify.hpp"
#include "qhopf/hopf.hpp"

namespace qhopf {

using json = nlohmann::ordered_json;

/// Input errors carry a JSON pointer, e.g. "/presentation/p/0/1: ...".
[[noreturn]] void fail_at(const std::string& path, const std::string& msg);

/// Field access with pointer-style errors.
const json& json_field(const json& j, const std::string& path, const std::string& key);
int json_int(const json& j, const std::string& path, long lo, long hi);

json scalar_to_json(const CycScalar& s);
/// Accepts an integer, "p/q", "zetaL", "zetaL^k", {"level", "coeffs"} or {"root": [L, k]}.
CycScalar scalar_from_json(const json& j, const std::string& path = "");

json word_to_json(const Presentation& pres, const Word& w);
json poly_to_json(const Presentation& pres, const NCPoly& p);
NCPoly poly_from_json(const Presentation& pres, const json& j, const std::string& path = "");

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, int rows, int cols, const std::string& path = "");

json presentation_to_json(const Presentation& pres);
PresentationSpec presentation_spec_from_json(const json& j, const std::string& path = "");
PresentationPtr presentation_from_json(const json& j, const std::string& path = "");

json hopf_to_json(const HopfSpec& h);
HopfSpec hopf_from_json(const json& j, const std::string& path = "");

json grouplike_to_json(const GrouplikeAction& g);
GrouplikeAction grouplike_from_json(const json& j, int t, const std::string& path = "");

json instance_to_json(const ActionInstance& inst);
/// All scalars are lifted to one ambient level: `level` if nonzero (it must be a multiple of
/// every input level), else the lcm of the input levels.
ActionInstance instance_from_json(const json& j, const std::string& path = "", int level = 0);
int instance_level(const ActionInstance& inst);

json report_to_json(const Report& r);
json inner_to_json(const InnerFaithfulness& f);
json family_to_json(const ClassifiedAction& a);
json compat_to_json(const CompatResult& r);
json search_to_json(const SearchResult& r);
json max_rank_to_json(const MaxRankResult& r, const std::vector<ClassifiedAction>& actions);

}  // namespace qhopf
