#include "lpa/structure.hpp"

#include <algorithm>

#include "lpa/errors.hpp"

namespace lpa {

  PathFamily::PathFamily(Graph const& g, std::vector<Path> paths)
      : _paths(std::move(paths)), _starting_at(g.vertex_count()) {
    for (std::size_t k = 0; k < _paths.size(); ++k) {
      if (!_index.emplace(_paths[k], k).second) {
        throw PreconditionError("duplicate path in block family");
      }
      _starting_at[_paths[k].src].push_back(k);
    }
  }

  std::size_t PathFamily::index_of(Path const& p) const {
    auto it = _index.find(p);
    return it == _index.end() ? _paths.size() : it->second;
  }

  std::size_t Decomposition::block_size(std::size_t block) const {
    if (block < sink_blocks.size()) {
      return sink_blocks[block].paths.size();
    }
    return cycle_blocks.at(block - sink_blocks.size()).paths.size();
  }

  Decomposition decompose(Graph const& g) {
    if (auto w = find_exit(g)) {
      throw PreconditionError("cycle " + to_string(g, w->cycle)
                              + " has exit " + g.edge(w->exit).name
                              + "; no block decomposition exists");
    }
    Decomposition dec;
    for (VertexId s : sinks(g)) {
      dec.sink_blocks.push_back(SinkBlock{s, PathFamily(g, paths_into(g, s))});
    }
    for (Path const& c : cycles(g)) {
      dec.cycle_blocks.push_back(
          CycleBlock{c, c.src, PathFamily(g, paths_into(g, c.src, c))});
    }
    return dec;
  }

  ////////////////////////////////////////////////////////////////////////
  // Matrix images
  ////////////////////////////////////////////////////////////////////////

  LaurentPoly BlockMatrix::entry(std::size_t j, std::size_t l) const {
    auto it = entries.find({j, l});
    return it == entries.end() ? LaurentPoly() : it->second;
  }

  void BlockMatrix::add(std::size_t j, std::size_t l, LaurentPoly const& v) {
    if (j >= dim || l >= dim) {
      throw InputError("matrix index out of range");
    }
    if (v.is_zero()) {
      return;
    }
    auto [it, inserted] = entries.try_emplace({j, l}, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) {
        entries.erase(it);
      }
    }
  }

  MatrixImage zero_image(Decomposition const& dec) {
    MatrixImage out(dec.block_count());
    for (std::size_t b = 0; b < out.size(); ++b) {
      out[b].dim     = dec.block_size(b);
      out[b].laurent = dec.is_cycle_block(b);
    }
    return out;
  }

  MatrixImage identity_image(Decomposition const& dec) {
    MatrixImage out = zero_image(dec);
    for (auto& block : out) {
      for (std::size_t j = 0; j < block.dim; ++j) {
        block.add(j, j, LaurentPoly(FieldElem(1)));
      }
    }
    return out;
  }

  namespace {
    void require_same_shape(MatrixImage const& a, MatrixImage const& b) {
      if (a.size() != b.size()) {
        throw InputError("matrix images have different block structure");
      }
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k].dim != b[k].dim) {
          throw InputError("matrix images have different block sizes");
        }
      }
    }
  }  // namespace

  MatrixImage image_add(MatrixImage const& a, MatrixImage const& b) {
    require_same_shape(a, b);
    MatrixImage out = a;
    for (std::size_t k = 0; k < b.size(); ++k) {
      for (auto const& [jl, v] : b[k].entries) {
        out[k].add(jl.first, jl.second, v);
      }
    }
    return out;
  }

  MatrixImage image_mul(MatrixImage const& a, MatrixImage const& b) {
    require_same_shape(a, b);
    MatrixImage out = a;
    for (std::size_t k = 0; k < a.size(); ++k) {
      out[k].entries.clear();
      std::map<std::size_t, std::vector<std::pair<std::size_t, LaurentPoly const*>>>
          rows_of_b;
      for (auto const& [jl, v] : b[k].entries) {
        rows_of_b[jl.first].emplace_back(jl.second, &v);
      }
      for (auto const& [jm, x] : a[k].entries) {
        auto it = rows_of_b.find(jm.second);
        if (it == rows_of_b.end()) {
          continue;
        }
        for (auto const& [l, y] : it->second) {
          out[k].add(jm.first, l, x * *y);
        }
      }
    }
    return out;
  }

  MatrixImage image_star(MatrixImage const& a, Involution inv) {
    MatrixImage out = a;
    for (std::size_t k = 0; k < a.size(); ++k) {
      out[k].entries.clear();
      for (auto const& [jl, v] : a[k].entries) {
        out[k].add(jl.second, jl.first, laurent_star(v, inv));
      }
    }
    return out;
  }

  bool image_is_zero(MatrixImage const& a) {
    return std::all_of(a.begin(), a.end(),
                       [](BlockMatrix const& b) { return b.entries.empty(); });
  }

  ////////////////////////////////////////////////////////////////////////
  // phi
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct Placed {
      std::size_t index;
      long        power;
    };

    // Writes a path ending at the base of the cycle as r_j c^k.
    Placed place_on_cycle(Graph const& g, CycleBlock const& block, Path p) {
      long              k = 0;
      std::size_t const n = block.cycle.length();
      while (p.length() >= n
             && std::equal(block.cycle.edges.begin(), block.cycle.edges.end(),
                           p.edges.end() - n)) {
        p.edges.resize(p.edges.size() - n);
        p.rng = block.base;
        ++k;
      }
      if (p.edges.empty()) {
        p.src = block.base;
      }
      std::size_t j = block.paths.index_of(p);
      if (j == block.paths.size()) {
        throw PreconditionError("path " + to_string(g, p)
                                + " is not in the cycle block family");
      }
      return {j, k};
    }

    std::size_t place_on_sink(Graph const& g, SinkBlock const& block,
                              Path const& p) {
      std::size_t j = block.paths.index_of(p);
      if (j == block.paths.size()) {
        throw PreconditionError("path " + to_string(g, p)
                                + " is not in the sink block family");
      }
      return j;
    }

  }  // namespace

  MatrixImage phi(Decomposition const& dec, AlgebraElement const& x) {
    if (x.mode() != AlgebraMode::Leavitt) {
      throw InputError("phi is defined on Leavitt path algebra elements");
    }
    Graph const& g   = x.graph();
    MatrixImage  out = zero_image(dec);
    // p q^* = sum_l (p p_l)(q p_l)^* over the family paths p_l leaving r(p).
    for (auto const& [m, c] : x.terms()) {
      VertexId w = m.p.rng;
      for (std::size_t b = 0; b < dec.sink_blocks.size(); ++b) {
        auto const& block = dec.sink_blocks[b];
        for (std::size_t l : block.paths.starting_at(w)) {
          Path const& pl = block.paths.paths()[l];
          std::size_t j  = place_on_sink(g, block, concat(m.p, pl));
          std::size_t i  = place_on_sink(g, block, concat(m.q, pl));
          out[b].add(j, i, LaurentPoly(c));
        }
      }
      for (std::size_t b = 0; b < dec.cycle_blocks.size(); ++b) {
        auto const& block = dec.cycle_blocks[b];
        for (std::size_t l : block.paths.starting_at(w)) {
          Path const& rl    = block.paths.paths()[l];
          Placed      left  = place_on_cycle(g, block, concat(m.p, rl));
          Placed      right = place_on_cycle(g, block, concat(m.q, rl));
          out[dec.sink_blocks.size() + b].add(
              left.index, right.index,
              LaurentPoly::monomial(left.power - right.power, c));
        }
      }
    }
    return out;
  }

  AlgebraElement phi_inverse_unit(ContextPtr const&    ctx,
                                  Decomposition const& dec,
                                  std::size_t          block,
                                  std::size_t          j,
                                  std::size_t          l,
                                  long                 k) {
    if (block >= dec.block_count()) {
      throw InputError("block index out of range");
    }
    if (j >= dec.block_size(block) || l >= dec.block_size(block)) {
      throw InputError("matrix unit index out of range");
    }
    if (!dec.is_cycle_block(block)) {
      if (k != 0) {
        throw InputError("sink blocks have no Laurent exponent");
      }
      auto const& paths = dec.sink_blocks[block].paths.paths();
      return AlgebraElement::monomial(ctx, Monomial{paths[j], paths[l]});
    }
    auto const& cb    = dec.cycle_blocks[block - dec.sink_blocks.size()];
    Path        left  = cb.paths.paths()[j];
    Path        right = cb.paths.paths()[l];
    Path&       grow  = k >= 0 ? left : right;
    for (long n = 0; n < (k >= 0 ? k : -k); ++n) {
      grow = concat(grow, cb.cycle);
    }
    return AlgebraElement::monomial(ctx, Monomial{left, right});
  }

  PullBackTrace::PullBackTrace(Decomposition dec, FieldConfig field)
      : _dec(std::move(dec)), _field(field) {
    if (!field.positive_definite()) {
      throw PreconditionError("a faithful trace needs a positive definite "
                              "involution on the coefficient field");
    }
  }

  FieldElem PullBackTrace::operator()(AlgebraElement const& x) const {
    FieldElem total;
    for (auto const& block : phi(_dec, x)) {
      for (auto const& [jl, v] : block.entries) {
        if (jl.first == jl.second) {
          total += laurent_a0(v);
        }
      }
    }
    return total.in_field(_field.field);
  }

  PullBackTrace pull_back_trace(Decomposition dec, FieldConfig field) {
    return PullBackTrace(std::move(dec), field);
  }

}  // namespace lpa
