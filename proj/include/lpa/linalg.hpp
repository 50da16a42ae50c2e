#ifndef LPA_LINALG_HPP_
#define LPA_LINALG_HPP_

// Exact linear algebra over Q and Q(i): dense row reduction for small
// systems and an incremental sparse echelon basis for spans of finitely
// supported vectors.

#include <cstddef>
#include <map>
#include <vector>

#include "lpa/scalars.hpp"

namespace lpa {

  using DenseMatrix = std::vector<std::vector<FieldElem>>;

  // Reduces `m` in place to reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref(DenseMatrix& m);

  std::size_t rank(DenseMatrix m);

  // Basis of {x : m x = 0} for an r x `cols` matrix.
  std::vector<std::vector<FieldElem>> nullspace(DenseMatrix m,
                                                std::size_t cols);

  // Finitely supported vector with no stored zeros.
  template <typename Key>
  using SparseVec = std::map<Key, FieldElem>;

  template <typename Key>
  void axpy(SparseVec<Key>& y, FieldElem const& a, SparseVec<Key> const& x) {
    if (a.is_zero()) {
      return;
    }
    for (auto const& [k, c] : x) {
      auto [it, inserted] = y.try_emplace(k, a * c);
      if (!inserted) {
        it->second += a * c;
        if (it->second.is_zero()) {
          y.erase(it);
        }
      }
    }
  }

  // Echelon basis of a growing subspace. Each stored vector is normalized so
  // its least key (the pivot) has coefficient 1, and no two share a pivot.
  template <typename Key>
  class SparseEchelon {
   public:
    // Returns true if `v` was independent of the current span (and was
    // added).
    bool insert(SparseVec<Key> v) {
      reduce(v);
      if (v.empty()) {
        return false;
      }
      FieldElem inv = v.begin()->second.inverse();
      for (auto& [k, c] : v) {
        c *= inv;
      }
      Key pivot = v.begin()->first;
      _rows.emplace(std::move(pivot), std::move(v));
      return true;
    }

    bool contains(SparseVec<Key> v) const {
      reduce(v);
      return v.empty();
    }

    std::size_t dimension() const {
      return _rows.size();
    }

   private:
    void reduce(SparseVec<Key>& v) const {
      while (!v.empty()) {
        auto it = _rows.find(v.begin()->first);
        if (it == _rows.end()) {
          return;
        }
        axpy(v, -v.begin()->second, it->second);
      }
    }

    std::map<Key, SparseVec<Key>> _rows;
  };

}  // namespace lpa

#endif  // LPA_LINALG_HPP_
