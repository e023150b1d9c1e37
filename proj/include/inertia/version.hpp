#pragma once

namespace inertia {

inline constexpr const char* kVersion = "0.1.0";

} // namespace inertia
