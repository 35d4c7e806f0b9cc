#pragma once

namespace scatter {

inline constexpr const char* kArtifactName = "scatter";
inline constexpr const char* kArtifactVersion = "0.1.0";

}  // namespace scatter
