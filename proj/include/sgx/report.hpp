#pragma once

#include <string>

#include <json.hpp>

#include "sgx/search.hpp"
#include "sgx/verify.hpp"

namespace sgx {

inline constexpr const char* kReportSchema = "sgx/1";

/// Wall time and evaluation counts vary between runs and worker counts, so
/// they appear only when `timing` is set; the rest is byte-stable.
nlohmann::json to_json(const SearchReport& r, bool timing = false);
nlohmann::json to_json(const VerifyReport& r, bool timing = false);

std::string to_table(const SearchReport& r, bool timing = false);
std::string to_table(const VerifyReport& r, bool timing = false);

/// Fixed 9-decimal rendering used for every printed index.
std::string format_index(double x);

}  // namespace sgx
