#pragma once

#include <cstdint>

namespace lcc::detail {

__extension__ typedef unsigned __int128 uint128;

/// x y mod m without overflow.
inline std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<uint128>(x) * y % m);
}

}  // namespace lcc::detail
