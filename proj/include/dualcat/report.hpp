#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dualcat/verify.hpp"

namespace dualcat::verify {

// {"statement":..., "p":..., "e":..., "params":{...}, "lhs":..., "rhs":...,
//  "pass":..., "skip_reason": string|null}
nlohmann::ordered_json to_json(const VerificationRecord& rec);

// {"records": [...], "summary": {"passed":.., "failed":.., "skipped":..}}
nlohmann::ordered_json to_json(const SweepResult& result);

// Same columns as the JSON keys; params flattened to "name=value;..." in one
// cell, empty skip_reason for records that ran.
std::string to_csv(const std::vector<VerificationRecord>& records);

std::string to_table(const std::vector<VerificationRecord>& records);

std::string summary_line(const SweepSummary& summary);

}  // namespace dualcat::verify
