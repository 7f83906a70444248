#pragma once

namespace fbc {

inline constexpr const char* kToolName = "upgcat";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

}  // namespace fbc
