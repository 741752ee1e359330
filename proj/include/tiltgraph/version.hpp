#pragma once

namespace tiltgraph {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kSnapshotFormat = "tiltgraph.snapshot.v1";
inline constexpr const char* kRngName = "tiltgraph.rng.v1"; // mt19937_64 + splitmix64 stream derivation

} // namespace tiltgraph
