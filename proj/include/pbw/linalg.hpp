#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pbw/lincomb.hpp"

namespace pbw {

using Matrix = std::vector<std::vector<Rational>>;

// Exact rank over Q of a family of sparse vectors.
template <class Key>
std::size_t rank(std::vector<LinComb<Key>> rows) {
  // Row echelon form keyed by the leading (smallest) key of each pivot row.
  std::vector<LinComb<Key>> pivots;
  for (auto& row : rows) {
    bool changed = true;
    while (!row.empty() && changed) {
      changed = false;
      const Key lead = row.begin()->first;
      for (const auto& p : pivots) {
        if (p.begin()->first == lead) {
          row.add_scaled(p, -row.begin()->second / p.begin()->second);
          changed = true;
          break;
        }
      }
    }
    if (!row.empty()) pivots.push_back(std::move(row));
  }
  return pivots.size();
}

// Inverse of a square matrix by Gauss-Jordan elimination; nullopt if singular.
std::optional<Matrix> invert(Matrix m);

}  // namespace pbw
