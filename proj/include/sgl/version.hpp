#pragma once

namespace sgl {

inline constexpr const char* kToolName = "semigroup-lab";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

}  // namespace sgl
