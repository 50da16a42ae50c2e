#ifndef LPA_SEMIGROUPS_HPP_
#define LPA_SEMIGROUPS_HPP_

// Finite semigroups with zero given by Cayley tables, the ~ relation
// (transitive closure of ab ~ ba), central maps, and traces on contracted
// semigroup rings.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpa/linalg.hpp"
#include "lpa/scalars.hpp"

namespace lpa {

  using SgIndex = std::uint32_t;
  using ClassId = std::uint32_t;
  using CayleyTable = std::vector<std::vector<SgIndex>>;

  class FiniteSemigroup {
   public:
    // Validates squareness, index ranges, associativity and that `zero` is
    // absorbing on both sides; throws InputError otherwise. Labels, when
    // given, must be unique and one per element.
    FiniteSemigroup(CayleyTable const&       table,
                    SgIndex                  zero,
                    std::vector<std::string> labels = {});

    std::size_t size() const {
      return _n;
    }
    SgIndex zero() const {
      return _zero;
    }
    SgIndex product(SgIndex a, SgIndex b) const {
      return _table[a * _n + b];
    }
    std::string label(SgIndex a) const;
    bool        has_labels() const {
      return !_labels.empty();
    }
    // Throws InputError for unknown labels.
    SgIndex index_of(std::string_view label) const;

   private:
    std::size_t              _n;
    SgIndex                  _zero;
    std::vector<SgIndex>     _table;
    std::vector<std::string> _labels;
  };

  // Text format: "n <size> zero <index>", then <size> rows of <size> indices,
  // then optional "label <index> <name>" lines. '#' starts a comment.
  FiniteSemigroup parse_cayley(std::string_view text);

  // {e_ij | 1 <= i,j <= n} u {0} with e_ij e_kl = e_il if j = k, else 0.
  // Index 0 is zero, e_ij has index 1 + (i-1)n + (j-1), label "e<i>_<j>".
  FiniteSemigroup matrix_units_semigroup(std::size_t n);
  SgIndex         matrix_unit(std::size_t n, std::size_t i, std::size_t j);

  // Group multiplication tables with identity at index 0.
  CayleyTable cyclic_group_table(std::size_t n);
  CayleyTable symmetric_group_table(std::size_t n);

  // G^0: the group with an absorbing zero adjoined at index 0; group element
  // k becomes index k + 1. Throws InputError if `group` is not a group.
  FiniteSemigroup group_with_zero(CayleyTable const& group);

  // All maps {1..n} -> {1..n} under composition (a*b = a after b), with zero
  // adjoined at index 0. Requires 1 <= n <= 4.
  FiniteSemigroup endo_semigroup(std::size_t n);
  // Index of the map i -> images[i-1] (images are 1-based).
  SgIndex endo_element(std::size_t n, std::vector<std::size_t> const& images);

  struct SimPartition {
    std::vector<ClassId>              class_of;
    std::vector<std::vector<SgIndex>> classes;
    ClassId                           zero_class;

    std::size_t nonzero_class_count() const {
      return classes.size() - 1;
    }
  };

  // ~-classes via union-find over all products (ab, ba). Class ids are
  // numbered by least member, so the result does not depend on `rng`, which
  // only shuffles the order in which pairs are merged.
  SimPartition sim_classes(FiniteSemigroup const& g,
                           std::mt19937*          rng = nullptr);

  // Pairs (a_i, b_i) with g = a_1 b_1, b_i a_i = a_{i+1} b_{i+1},
  // b_n a_n = h. Minimal length; empty when g == h; nullopt when g !~ h.
  using WitnessChain = std::vector<std::pair<SgIndex, SgIndex>>;
  std::optional<WitnessChain>
  sim_witness_chain(FiniteSemigroup const& g, SgIndex from, SgIndex to);

  // Element of the contracted semigroup ring; the zero of the semigroup is
  // never stored.
  using SgRingElem = SparseVec<SgIndex>;
  using FreeVector = SparseVec<ClassId>;

  SgRingElem sg_basis(FiniteSemigroup const& g, SgIndex a);
  SgRingElem sg_mul(FiniteSemigroup const& g,
                    SgRingElem const&      x,
                    SgRingElem const&      y);

  // A total table of values delta(a).
  template <typename Value>
  struct CentralMap {
    std::vector<Value> values;
  };
  using ScalarCentralMap = CentralMap<FieldElem>;
  using VectorCentralMap = CentralMap<FreeVector>;

  // delta(0) = 0 and delta(gh) = delta(hg) for all g, h.
  bool is_central_map(FiniteSemigroup const& g, ScalarCentralMap const& d);
  bool is_central_map(FiniteSemigroup const& g, VectorCentralMap const& d);

  // t(sum a_g g) = sum a_g delta(g). Throws PreconditionError if `d` is not
  // central.
  FieldElem  sg_trace_eval(FiniteSemigroup const&  g,
                           ScalarCentralMap const& d,
                           SgRingElem const&       x);
  FreeVector sg_trace_eval(FiniteSemigroup const&  g,
                           VectorCentralMap const& d,
                           SgRingElem const&       x);

  // delta(g) = unit vector at [g] for g !~ 0, and 0 otherwise. The induced
  // trace vanishes exactly on the span of commutators.
  VectorCentralMap minimal_trace(FiniteSemigroup const& g);
  VectorCentralMap minimal_trace(FiniteSemigroup const& g,
                                 SimPartition const&    classes);

  bool in_commutator_span(FiniteSemigroup const& g, SgRingElem const& x);

  // True iff the values on representatives of the nonzero ~-classes are
  // linearly independent over the field.
  bool is_minimal_sg_trace(FiniteSemigroup const& g, ScalarCentralMap const& d);
  bool is_minimal_sg_trace(FiniteSemigroup const& g, VectorCentralMap const& d);

  // A normalized minimal trace exists iff there is at most one nonzero class.
  bool admits_normalized_minimal(FiniteSemigroup const& g);

  // Identity of G \ {0} when that set is a group, nullopt otherwise.
  std::optional<SgIndex> group_identity(FiniteSemigroup const& g);

}  // namespace lpa

#endif  // LPA_SEMIGROUPS_HPP_
