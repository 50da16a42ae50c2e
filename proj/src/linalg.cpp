#include "lpa/linalg.hpp"

#include <utility>

namespace lpa {

  std::vector<std::size_t> rref(DenseMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) {
      return pivots;
    }
    std::size_t const cols = m.front().size();
    std::size_t       row  = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
      std::size_t sel = row;
      while (sel < m.size() && m[sel][col].is_zero()) {
        ++sel;
      }
      if (sel == m.size()) {
        continue;
      }
      std::swap(m[row], m[sel]);
      FieldElem inv = m[row][col].inverse();
      for (auto& x : m[row]) {
        x *= inv;
      }
      for (std::size_t r = 0; r < m.size(); ++r) {
        if (r == row || m[r][col].is_zero()) {
          continue;
        }
        FieldElem f = m[r][col];
        for (std::size_t c = col; c < cols; ++c) {
          m[r][c] -= f * m[row][c];
        }
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank(DenseMatrix m) {
    return rref(m).size();
  }

  std::vector<std::vector<FieldElem>> nullspace(DenseMatrix m,
                                                std::size_t cols) {
    auto                     pivots = rref(m);
    std::vector<bool>        is_pivot(cols, false);
    for (auto p : pivots) {
      is_pivot[p] = true;
    }
    std::vector<std::vector<FieldElem>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
      if (is_pivot[free]) {
        continue;
      }
      std::vector<FieldElem> v(cols);
      v[free] = FieldElem(1);
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        v[pivots[r]] = -m[r][free];
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

}  // namespace lpa
