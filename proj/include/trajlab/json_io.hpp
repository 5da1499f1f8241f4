#pragma once

#include <json.hpp>

#include "trajlab/encoding/nested_cv.hpp"
#include "trajlab/ingest/synth.hpp"
#include "trajlab/ltc/dra.hpp"
#include "trajlab/ltc/profile.hpp"

namespace trajlab {

// JSON views of the report types. Keys are emitted in lexicographic order
// and doubles use shortest round-trip formatting, so identical inputs always
// produce identical bytes. Undefined values serialize as null.

nlohmann::json to_json(const encoding::EncodingReport& report);
nlohmann::json to_json(const ltc::TrajectoryProfile& profile);
nlohmann::json to_json(const ltc::AlignmentProfile& alignment);
nlohmann::json to_json(const ltc::DraResult& result, const ltc::DraConfig& cfg);
nlohmann::json to_json(const ingest::SynthGroundTruth& truth);

/// dump(2) plus trailing newline.
std::string json_text(const nlohmann::json& j);

}  // namespace trajlab
