#include "skewq/exact_linalg.hpp"

#include <utility>

namespace skewq {

std::size_t rational_rank(RationalMatrix rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && sgn(rows[piv][col]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const mpq_class lead = rows[rank][col];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (sgn(rows[r][col]) == 0) continue;
      const mpq_class factor = rows[r][col] / lead;
      for (std::size_t c = col; c < cols; ++c)
        if (sgn(rows[rank][c]) != 0) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace skewq
