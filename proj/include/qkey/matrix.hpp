#pragma once

#include <string>
#include <vector>

#include "qkey/qrat.hpp"

namespace qkey {

/// Labelled matrix of exact coefficients. Column j holds the expansion of the
/// j-th source element; labels are permutations or weights in one-line form.
struct QMatrix {
  std::vector<std::vector<int>> row_labels;
  std::vector<std::vector<int>> col_labels;
  std::vector<std::vector<QRat>> entries;  // row-major

  const QRat& at(size_t r, size_t c) const { return entries[r][c]; }
  bool is_identity() const;
  bool is_upper_unitriangular() const;
  /// Aligned text table, '.' for zero.
  std::string to_string() const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;
};

}  // namespace qkey
