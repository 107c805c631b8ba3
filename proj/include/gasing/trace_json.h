#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gasing/derive.h"
#include "gasing/proofs.h"
#include "gasing/solver.h"

namespace gasing {

// Key order is insertion order, so dumps are byte-stable.
using Json = nlohmann::ordered_json;

Json steps_json(const DerivationTrace& trace);
Json conditions_json(const ConditionSet& conditions);

/// {operation, steps, result, side_conditions[, verdict]}.
Json trace_document(const std::string& operation, const DerivationTrace& trace,
                    const std::string& result, const ConditionSet& conditions,
                    const std::optional<std::string>& verdict = std::nullopt);

Json to_json(const Derivation& d);
Json to_json(const ProofCertificate& cert);
Json to_json(const Solution& s);

std::string dump(const Json& j);

}  // namespace gasing
