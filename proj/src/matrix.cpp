#include "qkey/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace qkey {

namespace {

std::string label(const std::vector<int>& v) {
  bool digits = std::all_of(v.begin(), v.end(), [](int x) { return x >= 0 && x <= 9; });
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (!digits && i > 0) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

bool QMatrix::is_identity() const {
  for (size_t r = 0; r < entries.size(); ++r)
    for (size_t c = 0; c < entries[r].size(); ++c)
      if (entries[r][c] != QRat(r == c ? 1 : 0)) return false;
  return true;
}

bool QMatrix::is_upper_unitriangular() const {
  for (size_t r = 0; r < entries.size(); ++r)
    for (size_t c = 0; c <= r && c < entries[r].size(); ++c)
      if (entries[r][c] != QRat(r == c ? 1 : 0)) return false;
  return true;
}

std::string QMatrix::to_string() const {
  std::vector<std::vector<std::string>> cells(entries.size() + 1);
  cells[0].push_back("");
  for (const auto& c : col_labels) cells[0].push_back(label(c));
  for (size_t r = 0; r < entries.size(); ++r) {
    cells[r + 1].push_back(r < row_labels.size() ? label(row_labels[r]) : "");
    for (const auto& x : entries[r]) cells[r + 1].push_back(x.is_zero() ? "." : x.to_string());
  }
  std::vector<size_t> width;
  for (const auto& row : cells)
    for (size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c > 0) os << "  ";
      os << row[c] << std::string(width[c] - row[c].size(), ' ');
      if (c == 0) os << " |";
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace qkey
