#pragma once

#include <string>

#include "json.hpp"

#include "infralog/harness.hpp"
#include "infralog/infraproduct.hpp"
#include "infralog/system.hpp"
#include "infralog/tower.hpp"

namespace infralog {

// Elements serialize by the shape their type dictates: atoms as carrier
// labels, sets and tuples as arrays.
nlohmann::json elem_to_json(const Elem& e, const Carrier& carrier);
Elem elem_from_json(const nlohmann::json& j, const Semitype& st, const Carrier& carrier);

nlohmann::json signature_to_json(const SignatureSpec& sig);
SignaturePtr signature_from_json(const nlohmann::json& j);

// Systems store their carrier, constants and the relation pairs beyond
// the base = and membership, in canonical order; systems built by a
// generator re-emit their generator stanza instead, so files round-trip
// byte-exactly either way.
nlohmann::json system_to_json(const System& system);
SystemPtr system_from_json(const nlohmann::json& j, Budget budget = {});

nlohmann::json evaluation_to_json(const Evaluation& eval, const System& context);
Evaluation evaluation_from_json(const nlohmann::json& j, const System& context);

nlohmann::json filter_to_json(const FilterSpec& filter);
FilterSpec filter_from_json(const nlohmann::json& j);

IndexedFamily family_from_json(const nlohmann::json& j, Budget budget = {});

nlohmann::json suite_result_to_json(const SuiteResult& result);

nlohmann::json tower_report_to_json(const Tower& tower, const TowerLimit* limit,
                                    const std::vector<RemarkReport>& witnesses);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace infralog
