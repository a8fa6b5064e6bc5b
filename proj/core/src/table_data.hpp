#pragma once

#include <cstdint>

namespace aisr::detail {

inline constexpr int kCatalogCount = 112;

extern const int kCatalogIds[kCatalogCount];
extern const std::uint8_t kCatalogMul[kCatalogCount][16];
extern const std::uint8_t kFigureAdd[16];

}  // namespace aisr::detail
