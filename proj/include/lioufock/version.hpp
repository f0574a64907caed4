#pragma once

namespace lioufock {
inline constexpr const char* kToolName = "lioufock";
inline constexpr const char* kVersion = "0.1.0";
} // namespace lioufock
