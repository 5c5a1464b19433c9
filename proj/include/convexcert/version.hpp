#pragma once

#include <string_view>

namespace convexcert {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr std::string_view kReportSchema = "convexcert.report/1";
inline constexpr std::string_view kIdentitiesSchema = "convexcert.identities/1";

}  // namespace convexcert
