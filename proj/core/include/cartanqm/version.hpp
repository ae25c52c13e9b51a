#pragma once

namespace cartanqm {

inline constexpr const char* version_string = "0.1.0";
inline constexpr int schema_version = 1;

}  // namespace cartanqm
