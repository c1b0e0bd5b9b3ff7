#ifndef GARSIDE_MATRIX_HPP
#define GARSIDE_MATRIX_HPP

#include <sstream>
#include <vector>

#include "garside/numeric.hpp"

namespace garside {

template <class T>
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  Mat(int r, int c, const T& fill)
      : rows(r), cols(c), a(static_cast<size_t>(r) * c, fill) {}

  T& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const T& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows; ++r) std::swap(at(r, i), at(r, j));
  }
};

using IMat = Mat<Int>;

inline IMat identity_mat(int n) {
  IMat m(n, n, Int(0));
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

inline IMat mat_mul(const IMat& x, const IMat& y) {
  if (x.cols != y.rows) throw error("mat_mul: shape mismatch");
  IMat r(x.rows, y.cols, Int(0));
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

inline bool mat_eq(const IMat& x, const IMat& y) {
  return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

inline std::string mat_str(const IMat& m) {
  std::ostringstream os;
  for (int r = 0; r < m.rows; ++r) {
    os << "[";
    for (int c = 0; c < m.cols; ++c) os << (c ? " " : "") << m.at(r, c).str();
    os << "]\n";
  }
  return os.str();
}

// Coordinate-list text export: one header line naming the ring and degree,
// then "row col entry" triples for nonzero entries, 0-based.
template <class T, class Str>
std::string coo_export(const Mat<T>& m, const std::string& ring, int degree,
                       Str&& entry_str, const T& zero) {
  std::ostringstream os;
  os << "# matrix ring=" << ring << " degree=" << degree << " rows=" << m.rows
     << " cols=" << m.cols << "\n";
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      if (!(m.at(r, c) == zero))
        os << r << " " << c << " " << entry_str(m.at(r, c)) << "\n";
  return os.str();
}

}  // namespace garside

#endif
