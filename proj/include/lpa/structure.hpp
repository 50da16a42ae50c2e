#ifndef LPA_STRUCTURE_HPP_
#define LPA_STRUCTURE_HPP_

// Block decomposition of L_K(E) for a finite no-exit graph E:
//
//   L_K(E)  ~=  (+)_sinks M_{|L_i|}(K)  (+)  (+)_cycles M_{|N_i|}(K[x, x^-1])
//
// where L_i are the paths ending in sink s_i and N_i the paths ending in the
// base of cycle c_i that do not contain c_i. The isomorphism sends
// p_j p_l^* to e_jl and r_j c_i^k r_l^* to x^k e_jl.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lpa/graphs.hpp"
#include "lpa/path_algebras.hpp"
#include "lpa/scalars.hpp"

namespace lpa {

  // Paths of one block, in deterministic order, with lookup tables.
  class PathFamily {
   public:
    PathFamily() = default;
    explicit PathFamily(Graph const& g, std::vector<Path> paths);

    std::vector<Path> const& paths() const {
      return _paths;
    }
    std::size_t size() const {
      return _paths.size();
    }
    // Index of `p`, or size() if absent.
    std::size_t index_of(Path const& p) const;
    // Indices of the family paths with source v.
    std::vector<std::size_t> const& starting_at(VertexId v) const {
      return _starting_at.at(v);
    }

   private:
    std::vector<Path>                     _paths;
    std::map<Path, std::size_t>           _index;
    std::vector<std::vector<std::size_t>> _starting_at;
  };

  struct SinkBlock {
    VertexId   sink;
    PathFamily paths;
  };

  struct CycleBlock {
    Path       cycle;  // canonical rotation; based at `base`
    VertexId   base;
    PathFamily paths;
  };

  struct Decomposition {
    std::vector<SinkBlock>  sink_blocks;
    std::vector<CycleBlock> cycle_blocks;

    // Sink blocks are numbered first, then cycle blocks.
    std::size_t block_count() const {
      return sink_blocks.size() + cycle_blocks.size();
    }
    std::size_t block_size(std::size_t block) const;
    bool        is_cycle_block(std::size_t block) const {
      return block >= sink_blocks.size();
    }
  };

  // Throws PreconditionError, naming a cycle and its exit, unless g is
  // no-exit.
  Decomposition decompose(Graph const& g);

  // One block of a matrix image. Sink blocks only hold constants.
  struct BlockMatrix {
    std::size_t                                          dim    = 0;
    bool                                                 laurent = false;
    std::map<std::pair<std::size_t, std::size_t>, LaurentPoly> entries;

    LaurentPoly entry(std::size_t j, std::size_t l) const;
    void        add(std::size_t j, std::size_t l, LaurentPoly const& v);

    friend bool operator==(BlockMatrix const& a, BlockMatrix const& b) {
      return a.dim == b.dim && a.laurent == b.laurent
             && a.entries == b.entries;
    }
  };

  using MatrixImage = std::vector<BlockMatrix>;

  MatrixImage zero_image(Decomposition const& dec);
  MatrixImage identity_image(Decomposition const& dec);
  MatrixImage image_add(MatrixImage const& a, MatrixImage const& b);
  MatrixImage image_mul(MatrixImage const& a, MatrixImage const& b);
  // Conjugate transpose with the involution extended to K[x, x^-1].
  MatrixImage image_star(MatrixImage const& a, Involution inv);
  bool        image_is_zero(MatrixImage const& a);

  // The *-isomorphism on an element of L_K(E) (any spanning monomials are
  // accepted, not only canonical ones). Throws InputError for Cohn
  // elements.
  MatrixImage phi(Decomposition const& dec, AlgebraElement const& x);

  // p_j p_l^* on sink blocks; r_j c^k r_l^* on cycle blocks, with c^0 the
  // base vertex and c^k = (c^*)^-k for k < 0. Indices are 0-based.
  AlgebraElement phi_inverse_unit(ContextPtr const&    ctx,
                                  Decomposition const& dec,
                                  std::size_t          block,
                                  std::size_t          j,
                                  std::size_t          l,
                                  long                 k = 0);

  // Faithful K-valued trace: sum over blocks of the matrix trace, composed
  // with the constant-term map on Laurent blocks.
  class PullBackTrace {
   public:
    PullBackTrace(Decomposition dec, FieldConfig field);

    FieldElem operator()(AlgebraElement const& x) const;

    Decomposition const& decomposition() const {
      return _dec;
    }
    FieldConfig const& field() const {
      return _field;
    }

   private:
    Decomposition _dec;
    FieldConfig   _field;
  };

  // Throws PreconditionError unless `field` is positive definite.
  PullBackTrace pull_back_trace(Decomposition dec, FieldConfig field);

}  // namespace lpa

#endif  // LPA_STRUCTURE_HPP_
