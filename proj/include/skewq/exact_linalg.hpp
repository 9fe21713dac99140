#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace skewq {

using RationalMatrix = std::vector<std::vector<mpq_class>>;

// Rank over Q by Gaussian elimination; the argument is consumed.
std::size_t rational_rank(RationalMatrix rows);

}  // namespace skewq
