#pragma once

#include <json.hpp>

#include "weyl/correspondence.hpp"
#include "weyl/oracle.hpp"
#include "weyl/subspace.hpp"

namespace weyl {

/// JSON views of engine values. Objects use nlohmann's default key
/// ordering (alphabetical), so serialized output is byte-stable.
nlohmann::json json_of(const Poly& p);
nlohmann::json json_of(const WeylOp& g, bool unicode = false);
nlohmann::json json_of(const Subspace& V);
nlohmann::json json_of(const IdealPresentation& I, bool unicode = false);
nlohmann::json json_of(const Caps& caps);
nlohmann::json json_of(const PdVerdict& v);
nlohmann::json json_of(const CaseReport& r);
nlohmann::json json_of(const GammaReport& r);
nlohmann::json json_of(const RoundtripReport& r);

}  // namespace weyl
