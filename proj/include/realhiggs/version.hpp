#pragma once

namespace realhiggs {

inline constexpr const char* kEngineVersion = "1.0.0";
/// Bumped whenever the canonical form of a cached A_{g,r} could change.
inline constexpr int kPipelineVersion = 1;

}  // namespace realhiggs
