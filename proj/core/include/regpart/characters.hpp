#pragma once

#include "regpart/partition.hpp"

#include <cstdint>

namespace regpart {

/// Irreducible character value chi^lambda at the class of cycle type rho,
/// by signed border-strip (rim hook) removal on beta-sets. Memoized; safe
/// for concurrent callers. Throws std::invalid_argument if weights differ.
std::int64_t mn_character(const Partition& lambda, const Partition& rho);

} // namespace regpart
