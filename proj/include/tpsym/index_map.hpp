#pragma once

#include <vector>

#include "tpsym/common.hpp"
#include "tpsym/partitions.hpp"

namespace tpsym {

/// A multi-index (i_1,...,i_k) for a shape d, 0 <= i_r < d_r. Slot 1 owns the
/// largest stride, so |i_1 ... i_k> maps to L = sum_r i_r * prod_{j>r} d_j.
struct MultiIndex {
  std::vector<label_t> digits;
};

/// Mixed-radix digits of L in radices d_1...d_k, most significant first.
inline MultiIndex flat_to_multi(label_t flat, const Dims& d) {
  require(flat >= 0 && flat < d.product(), "basis label out of range");
  std::vector<label_t> digits(static_cast<std::size_t>(d.size()));
  for (int r = d.size() - 1; r >= 0; --r) {
    digits[static_cast<std::size_t>(r)] = flat % d[r];
    flat /= d[r];
  }
  return MultiIndex{std::move(digits)};
}

inline label_t multi_to_flat(const MultiIndex& m, const Dims& d) {
  require(static_cast<int>(m.digits.size()) == d.size(), "multi-index length mismatch");
  label_t flat = 0;
  for (int r = 0; r < d.size(); ++r) {
    const label_t digit = m.digits[static_cast<std::size_t>(r)];
    require(digit >= 0 && digit < d[r], "multi-index digit out of range");
    flat = flat * d[r] + digit;
  }
  return flat;
}

/// Bipartite specialization: L = i*d2 + j with i = floor(L/d2), j = L mod d2.
inline std::pair<label_t, label_t> bipartite_flat_to_pair(label_t flat, label_t d1, label_t d2) {
  require(d1 >= 2 && d2 >= 2, "subsystem dimensions must be greater than 1");
  require(flat >= 0 && flat < d1 * d2, "basis label out of range");
  return {flat / d2, flat % d2};
}

inline label_t bipartite_pair_to_flat(label_t i, label_t j, label_t d1, label_t d2) {
  require(i >= 0 && i < d1 && j >= 0 && j < d2, "pair index out of range");
  return i * d2 + j;
}

}  // namespace tpsym
