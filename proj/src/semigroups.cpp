#include "lpa/semigroups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "lpa/errors.hpp"

namespace lpa {

  namespace {

    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), 0);
      }
      std::size_t find(std::size_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }
      void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          // Smaller root wins, so each root is its class minimum.
          if (b < a) {
            std::swap(a, b);
          }
          _parent[b] = a;
        }
      }

     private:
      std::vector<std::size_t> _parent;
    };

    std::string matrix_unit_label(std::size_t i, std::size_t j) {
      return "e" + std::to_string(i) + "_" + std::to_string(j);
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FiniteSemigroup
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup::FiniteSemigroup(CayleyTable const&       table,
                                   SgIndex                  zero,
                                   std::vector<std::string> labels)
      : _n(table.size()), _zero(zero), _labels(std::move(labels)) {
    if (_n == 0) {
      throw InputError("a semigroup with zero has at least one element");
    }
    if (zero >= _n) {
      throw InputError("zero index " + std::to_string(zero) + " out of range");
    }
    _table.reserve(_n * _n);
    for (std::size_t a = 0; a < _n; ++a) {
      if (table[a].size() != _n) {
        throw InputError("Cayley table is not square (row "
                         + std::to_string(a) + ")");
      }
      for (SgIndex x : table[a]) {
        if (x >= _n) {
          throw InputError("table entry " + std::to_string(x)
                           + " out of range");
        }
        _table.push_back(x);
      }
    }
    for (SgIndex a = 0; a < _n; ++a) {
      if (product(a, _zero) != _zero || product(_zero, a) != _zero) {
        throw InputError("element " + std::to_string(_zero)
                         + " is not an absorbing zero (fails against "
                         + std::to_string(a) + ")");
      }
    }
    for (SgIndex a = 0; a < _n; ++a) {
      for (SgIndex b = 0; b < _n; ++b) {
        SgIndex ab = product(a, b);
        for (SgIndex c = 0; c < _n; ++c) {
          if (product(ab, c) != product(a, product(b, c))) {
            throw InputError("table is not associative at ("
                             + std::to_string(a) + ", " + std::to_string(b)
                             + ", " + std::to_string(c) + ")");
          }
        }
      }
    }
    if (!_labels.empty()) {
      if (_labels.size() != _n) {
        throw InputError("expected one label per element");
      }
      std::vector<std::string> sorted = _labels;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InputError("duplicate element label");
      }
    }
  }

  std::string FiniteSemigroup::label(SgIndex a) const {
    return _labels.empty() ? std::to_string(a) : _labels.at(a);
  }

  SgIndex FiniteSemigroup::index_of(std::string_view label) const {
    for (SgIndex a = 0; a < _n; ++a) {
      if (this->label(a) == label) {
        return a;
      }
    }
    throw InputError("unknown element '" + std::string(label) + "'");
  }

  FiniteSemigroup parse_cayley(std::string_view text) {
    std::istringstream                         in{std::string(text)};
    std::string                                line;
    std::size_t                                lineno = 0;
    std::optional<std::size_t>                 size;
    SgIndex                                    zero = 0;
    CayleyTable                                table;
    std::vector<std::pair<SgIndex, std::string>> label_lines;

    auto fail = [&](std::string const& msg) {
      throw InputError("line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream ls(line);
      std::string        word;
      if (!(ls >> word)) {
        continue;
      }
      if (!size) {
        std::string zword;
        long long   n = 0, z = 0;
        ls.clear();
        std::istringstream hs(line);
        if (!(hs >> word >> n >> zword >> z) || word != "n" || zword != "zero"
            || n <= 0 || z < 0) {
          fail("expected header 'n <size> zero <index>'");
        }
        if (std::string extra; hs >> extra) {
          fail("trailing text after header");
        }
        size = static_cast<std::size_t>(n);
        zero = static_cast<SgIndex>(z);
        continue;
      }
      if (word == "label") {
        long long   idx = -1;
        std::string name;
        if (!(ls >> idx >> name) || idx < 0
            || static_cast<std::size_t>(idx) >= *size) {
          fail("expected 'label <index> <name>'");
        }
        label_lines.emplace_back(static_cast<SgIndex>(idx), name);
        continue;
      }
      if (table.size() == *size) {
        fail("too many table rows");
      }
      std::istringstream        rs(line);
      std::vector<SgIndex>      row;
      long long                 x = 0;
      while (rs >> x) {
        if (x < 0) {
          fail("negative table entry");
        }
        row.push_back(static_cast<SgIndex>(x));
      }
      if (!rs.eof()) {
        fail("non-numeric table entry");
      }
      if (row.size() != *size) {
        fail("row has " + std::to_string(row.size()) + " entries, expected "
             + std::to_string(*size));
      }
      table.push_back(std::move(row));
    }
    if (!size) {
      throw InputError("missing header 'n <size> zero <index>'");
    }
    if (table.size() != *size) {
      throw InputError("expected " + std::to_string(*size) + " table rows, got "
                       + std::to_string(table.size()));
    }
    std::vector<std::string> labels;
    if (!label_lines.empty()) {
      labels.resize(*size);
      for (std::size_t a = 0; a < *size; ++a) {
        labels[a] = std::to_string(a);
      }
      for (auto const& [idx, name] : label_lines) {
        labels[idx] = name;
      }
    }
    return FiniteSemigroup(table, zero, std::move(labels));
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructors
  ////////////////////////////////////////////////////////////////////////

  SgIndex matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
    if (i < 1 || j < 1 || i > n || j > n) {
      throw InputError("matrix unit index out of range");
    }
    return static_cast<SgIndex>(1 + (i - 1) * n + (j - 1));
  }

  FiniteSemigroup matrix_units_semigroup(std::size_t n) {
    if (n == 0) {
      throw InputError("matrix units need n >= 1");
    }
    std::size_t const        size = n * n + 1;
    CayleyTable              table(size, std::vector<SgIndex>(size, 0));
    std::vector<std::string> labels(size);
    labels[0] = "0";
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        SgIndex a = matrix_unit(n, i, j);
        labels[a] = matrix_unit_label(i, j);
        for (std::size_t l = 1; l <= n; ++l) {
          table[a][matrix_unit(n, j, l)] = matrix_unit(n, i, l);
        }
      }
    }
    return FiniteSemigroup(table, 0, std::move(labels));
  }

  CayleyTable cyclic_group_table(std::size_t n) {
    CayleyTable t(n, std::vector<SgIndex>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t[a][b] = static_cast<SgIndex>((a + b) % n);
      }
    }
    return t;
  }

  CayleyTable symmetric_group_table(std::size_t n) {
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t>              p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    CayleyTable t(perms.size(), std::vector<SgIndex>(perms.size()));
    for (std::size_t a = 0; a < perms.size(); ++a) {
      for (std::size_t b = 0; b < perms.size(); ++b) {
        std::vector<std::size_t> c(n);
        for (std::size_t k = 0; k < n; ++k) {
          c[k] = perms[a][perms[b][k]];
        }
        auto it = std::find(perms.begin(), perms.end(), c);
        t[a][b] = static_cast<SgIndex>(it - perms.begin());
      }
    }
    return t;
  }

  FiniteSemigroup group_with_zero(CayleyTable const& group) {
    std::size_t const n = group.size();
    if (n == 0) {
      throw InputError("empty group table");
    }
    for (auto const& row : group) {
      if (row.size() != n) {
        throw InputError("group table is not square");
      }
      for (SgIndex x : row) {
        if (x >= n) {
          throw InputError("group table entry out of range");
        }
      }
    }
    // Latin square plus a two-sided identity plus associativity (checked by
    // the semigroup constructor below) characterizes a group.
    std::optional<SgIndex> identity;
    for (SgIndex e = 0; e < n && !identity; ++e) {
      bool ok = true;
      for (SgIndex a = 0; a < n && ok; ++a) {
        ok = group[e][a] == a && group[a][e] == a;
      }
      if (ok) {
        identity = e;
      }
    }
    if (!identity) {
      throw InputError("table has no identity element; not a group");
    }
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<bool> seen_row(n, false), seen_col(n, false);
      for (std::size_t b = 0; b < n; ++b) {
        seen_row[group[a][b]] = true;
        seen_col[group[b][a]] = true;
      }
      if (std::find(seen_row.begin(), seen_row.end(), false) != seen_row.end()
          || std::find(seen_col.begin(), seen_col.end(), false)
                 != seen_col.end()) {
        throw InputError("table is not a Latin square; not a group");
      }
    }
    CayleyTable              table(n + 1, std::vector<SgIndex>(n + 1, 0));
    std::vector<std::string> labels(n + 1);
    labels[0] = "0";
    for (std::size_t a = 0; a < n; ++a) {
      labels[a + 1] = "g" + std::to_string(a);
      for (std::size_t b = 0; b < n; ++b) {
        table[a + 1][b + 1] = group[a][b] + 1;
      }
    }
    return FiniteSemigroup(table, 0, std::move(labels));
  }

  namespace {
    std::vector<std::size_t> endo_images(std::size_t n, std::size_t code) {
      std::vector<std::size_t> img(n);
      for (std::size_t k = n; k-- > 0;) {
        img[k] = code % n + 1;
        code /= n;
      }
      return img;
    }
  }  // namespace

  SgIndex endo_element(std::size_t n, std::vector<std::size_t> const& images) {
    if (images.size() != n) {
      throw InputError("map must list one image per point");
    }
    std::size_t code = 0;
    for (std::size_t x : images) {
      if (x < 1 || x > n) {
        throw InputError("image out of range");
      }
      code = code * n + (x - 1);
    }
    return static_cast<SgIndex>(code + 1);
  }

  FiniteSemigroup endo_semigroup(std::size_t n) {
    if (n < 1 || n > 4) {
      throw InputError("endo_semigroup supports 1 <= n <= 4");
    }
    std::size_t count = 1;
    for (std::size_t k = 0; k < n; ++k) {
      count *= n;
    }
    CayleyTable              table(count + 1,
                                   std::vector<SgIndex>(count + 1, 0));
    std::vector<std::string> labels(count + 1);
    labels[0] = "0";
    std::vector<std::vector<std::size_t>> maps(count);
    for (std::size_t code = 0; code < count; ++code) {
      maps[code] = endo_images(n, code);
      std::string lab = "f";
      for (std::size_t x : maps[code]) {
        lab += std::to_string(x);
      }
      labels[code + 1] = lab;
    }
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = 0; b < count; ++b) {
        std::vector<std::size_t> c(n);
        for (std::size_t k = 0; k < n; ++k) {
          c[k] = maps[a][maps[b][k] - 1];
        }
        table[a + 1][b + 1] = endo_element(n, c);
      }
    }
    return FiniteSemigroup(table, 0, std::move(labels));
  }

  ////////////////////////////////////////////////////////////////////////
  // ~ classes
  ////////////////////////////////////////////////////////////////////////

  SimPartition sim_classes(FiniteSemigroup const& g, std::mt19937* rng) {
    std::size_t const n = g.size();
    UnionFind         uf(n);
    if (rng == nullptr) {
      for (SgIndex a = 0; a < n; ++a) {
        for (SgIndex b = 0; b < n; ++b) {
          uf.unite(g.product(a, b), g.product(b, a));
        }
      }
    } else {
      std::vector<std::pair<SgIndex, SgIndex>> pairs;
      pairs.reserve(n * n);
      for (SgIndex a = 0; a < n; ++a) {
        for (SgIndex b = 0; b < n; ++b) {
          pairs.emplace_back(a, b);
        }
      }
      std::shuffle(pairs.begin(), pairs.end(), *rng);
      for (auto [a, b] : pairs) {
        uf.unite(g.product(a, b), g.product(b, a));
      }
    }
    SimPartition                            out;
    out.class_of.assign(n, 0);
    std::unordered_map<std::size_t, ClassId> id_of_root;
    for (SgIndex a = 0; a < n; ++a) {
      std::size_t r           = uf.find(a);
      auto [it, inserted]     = id_of_root.try_emplace(
          r, static_cast<ClassId>(out.classes.size()));
      if (inserted) {
        out.classes.emplace_back();
      }
      out.class_of[a] = it->second;
      out.classes[it->second].push_back(a);
    }
    out.zero_class = out.class_of[g.zero()];
    return out;
  }

  std::optional<WitnessChain>
  sim_witness_chain(FiniteSemigroup const& g, SgIndex from, SgIndex to) {
    std::size_t const n = g.size();
    if (from >= n || to >= n) {
      throw InputError("element index out of range");
    }
    if (from == to) {
      return WitnessChain{};
    }
    // Edge ab -> ba labelled (a, b); BFS gives a shortest chain.
    std::vector<std::vector<std::pair<SgIndex, SgIndex>>> out_pairs(n);
    for (SgIndex a = 0; a < n; ++a) {
      for (SgIndex b = 0; b < n; ++b) {
        out_pairs[g.product(a, b)].emplace_back(a, b);
      }
    }
    constexpr SgIndex                      unseen = ~SgIndex(0);
    std::vector<SgIndex>                   prev(n, unseen);
    std::vector<std::pair<SgIndex, SgIndex>> via(n);
    std::deque<SgIndex>                    queue{from};
    prev[from] = from;
    while (!queue.empty()) {
      SgIndex u = queue.front();
      queue.pop_front();
      for (auto [a, b] : out_pairs[u]) {
        SgIndex w = g.product(b, a);
        if (prev[w] != unseen) {
          continue;
        }
        prev[w] = u;
        via[w]  = {a, b};
        if (w == to) {
          WitnessChain chain;
          for (SgIndex x = to; x != from; x = prev[x]) {
            chain.push_back(via[x]);
          }
          std::reverse(chain.begin(), chain.end());
          return chain;
        }
        queue.push_back(w);
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Ring elements and traces
  ////////////////////////////////////////////////////////////////////////

  SgRingElem sg_basis(FiniteSemigroup const& g, SgIndex a) {
    SgRingElem x;
    if (a != g.zero()) {
      x.emplace(a, FieldElem(1));
    }
    return x;
  }

  SgRingElem sg_mul(FiniteSemigroup const& g,
                    SgRingElem const&      x,
                    SgRingElem const&      y) {
    SgRingElem out;
    for (auto const& [a, ca] : x) {
      for (auto const& [b, cb] : y) {
        SgIndex ab = g.product(a, b);
        if (ab == g.zero()) {
          continue;
        }
        axpy(out, ca * cb, sg_basis(g, ab));
      }
    }
    return out;
  }

  namespace {
    bool is_zero_value(FieldElem const& v) {
      return v.is_zero();
    }
    bool is_zero_value(FreeVector const& v) {
      return v.empty();
    }

    template <typename Value>
    bool is_central_impl(FiniteSemigroup const& g, CentralMap<Value> const& d) {
      if (d.values.size() != g.size()) {
        throw InputError("central map must assign a value to every element");
      }
      if (!is_zero_value(d.values[g.zero()])) {
        return false;
      }
      for (SgIndex a = 0; a < g.size(); ++a) {
        for (SgIndex b = 0; b < a; ++b) {
          if (!(d.values[g.product(a, b)] == d.values[g.product(b, a)])) {
            return false;
          }
        }
      }
      return true;
    }

    template <typename Value>
    void require_central(FiniteSemigroup const& g, CentralMap<Value> const& d) {
      if (!is_central_impl(g, d)) {
        throw PreconditionError("map is not central: delta(gh) != delta(hg) "
                                "for some g, h, or delta(0) != 0");
      }
    }

    // Value vectors on one representative per nonzero class are
    // independent.
    template <typename ToVec>
    bool independent_on_classes(FiniteSemigroup const& g, ToVec to_vec) {
      auto                      part = sim_classes(g);
      SparseEchelon<ClassId>    span;
      for (ClassId c = 0; c < part.classes.size(); ++c) {
        if (c == part.zero_class) {
          continue;
        }
        if (!span.insert(to_vec(part.classes[c].front()))) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  bool is_central_map(FiniteSemigroup const& g, ScalarCentralMap const& d) {
    return is_central_impl(g, d);
  }

  bool is_central_map(FiniteSemigroup const& g, VectorCentralMap const& d) {
    return is_central_impl(g, d);
  }

  FieldElem sg_trace_eval(FiniteSemigroup const&  g,
                          ScalarCentralMap const& d,
                          SgRingElem const&       x) {
    require_central(g, d);
    FieldElem out;
    for (auto const& [a, c] : x) {
      out += c * d.values[a];
    }
    return out;
  }

  FreeVector sg_trace_eval(FiniteSemigroup const&  g,
                           VectorCentralMap const& d,
                           SgRingElem const&       x) {
    require_central(g, d);
    FreeVector out;
    for (auto const& [a, c] : x) {
      axpy(out, c, d.values[a]);
    }
    return out;
  }

  VectorCentralMap minimal_trace(FiniteSemigroup const& g) {
    return minimal_trace(g, sim_classes(g));
  }

  VectorCentralMap minimal_trace(FiniteSemigroup const& g,
                                 SimPartition const&    classes) {
    VectorCentralMap d;
    d.values.resize(g.size());
    for (SgIndex a = 0; a < g.size(); ++a) {
      ClassId c = classes.class_of[a];
      if (c != classes.zero_class) {
        d.values[a].emplace(c, FieldElem(1));
      }
    }
    return d;
  }

  bool in_commutator_span(FiniteSemigroup const& g, SgRingElem const& x) {
    return sg_trace_eval(g, minimal_trace(g), x).empty();
  }

  bool is_minimal_sg_trace(FiniteSemigroup const& g, ScalarCentralMap const& d) {
    require_central(g, d);
    return independent_on_classes(g, [&](SgIndex a) {
      FreeVector v;
      if (!d.values[a].is_zero()) {
        v.emplace(0, d.values[a]);
      }
      return v;
    });
  }

  bool is_minimal_sg_trace(FiniteSemigroup const& g, VectorCentralMap const& d) {
    require_central(g, d);
    return independent_on_classes(g,
                                  [&](SgIndex a) { return d.values[a]; });
  }

  bool admits_normalized_minimal(FiniteSemigroup const& g) {
    return sim_classes(g).nonzero_class_count() <= 1;
  }

  std::optional<SgIndex> group_identity(FiniteSemigroup const& g) {
    std::size_t const n = g.size();
    if (n < 2) {
      return std::nullopt;
    }
    std::optional<SgIndex> identity;
    for (SgIndex e = 0; e < n && !identity; ++e) {
      if (e == g.zero()) {
        continue;
      }
      bool ok = true;
      for (SgIndex a = 0; a < n && ok; ++a) {
        ok = a == g.zero() || (g.product(e, a) == a && g.product(a, e) == a);
      }
      if (ok) {
        identity = e;
      }
    }
    if (!identity) {
      return std::nullopt;
    }
    for (SgIndex a = 0; a < n; ++a) {
      if (a == g.zero()) {
        continue;
      }
      bool has_inverse = false;
      for (SgIndex b = 0; b < n && !has_inverse; ++b) {
        has_inverse = g.product(a, b) == *identity;
      }
      if (!has_inverse) {
        return std::nullopt;
      }
      for (SgIndex b = 0; b < n; ++b) {
        if (b != g.zero() && g.product(a, b) == g.zero()) {
          return std::nullopt;
        }
      }
    }
    return identity;
  }

}  // namespace lpa
