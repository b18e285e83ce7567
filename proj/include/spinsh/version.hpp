// Library version string, reported in verification output.
#pragma once

namespace spinsh {

inline constexpr const char* kVersion = "1.0.0";

} // namespace spinsh
