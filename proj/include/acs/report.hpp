#pragma once

#include "acs/catalog.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace acs {

inline constexpr const char* kEngineName = "acs-forms";
inline constexpr const char* kEngineVersion = "1.0.0";

using Json = nlohmann::ordered_json;

/// Common header: engine, version, command, manifold and seed.
Json report_header(const std::string& command, const ManifoldDescriptor& manifold,
                   std::optional<std::uint64_t> seed = std::nullopt);

Json to_json(const HermitianGeometry& g, const MetricReport& r);
Json to_json(const RelationReport& r, const AlmostComplexStructure& acs);
Json to_json(const HermitianGeometry& g, const HarmonicBasis& h);
Json to_json(const BatchSummary& s);
Json to_json(const ObstructionCertificate& c);

std::string describe(const HermitianGeometry& g, const MetricReport& r);

}  // namespace acs
