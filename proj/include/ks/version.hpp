#pragma once

namespace ks {

inline constexpr const char* kToolName = "kscert";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kInstanceSchemaVersion = 1;
inline constexpr int kReportSchemaVersion = 1;

}  // namespace ks
