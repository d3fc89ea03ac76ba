#pragma once

#include <string>

#include "json.hpp"
#include "lowcore/disc.hpp"
#include "lowcore/hardgen.hpp"
#include "lowcore/oned.hpp"
#include "lowcore/verify.hpp"

namespace lowcore {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Non-finite values become the strings "inf", "-inf" or "nan".
Json number(double x);

Json to_json(const CenterSet& C);
Json to_json(const AuditReport& r);
Json to_json(const KMedianResult& r);
Json to_json(const FeatureReport& r);
Json to_json(const LedgerReport& r);
Json to_json(const AdversarialReport& r);
Json to_json(const MixedCheckReport& r);
// Summary only; the subset itself goes to CSV.
Json to_json(const MixedCoreset& m);

Json interval_certificate(const Interval1DInstance& inst);
Json subspace_certificate(const SubspaceInstance& inst);

std::string dump(const Json& j);

}  // namespace lowcore
