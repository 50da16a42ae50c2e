#include "lpa/graphs.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "lpa/errors.hpp"

namespace lpa {

  namespace {

    bool valid_id(std::string_view id) {
      if (id.empty()) {
        return false;
      }
      auto alpha = [](char c) {
        return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
      };
      if (!alpha(id.front())) {
        return false;
      }
      return std::all_of(id.begin(), id.end(), [&](char c) {
        return alpha(c) || std::isdigit(static_cast<unsigned char>(c)) != 0;
      });
    }

    bool lex_less_edges(Graph const&               g,
                        std::vector<EdgeId> const& a,
                        std::vector<EdgeId> const& b) {
      return std::lexicographical_compare(
          a.begin(), a.end(), b.begin(), b.end(), [&](EdgeId x, EdgeId y) {
            return g.edge_rank(x) < g.edge_rank(y);
          });
    }

  }  // namespace

  Graph::Graph(std::vector<std::string> const& vertices,
               std::vector<EdgeDecl> const&    edges)
      : _vertices(vertices),
        _out(vertices.size()),
        _in(vertices.size()) {
    std::map<std::string, VertexId, std::less<>> vid;
    std::map<std::string, EdgeId, std::less<>>   seen_edges;
    for (VertexId v = 0; v < vertices.size(); ++v) {
      if (!valid_id(vertices[v])) {
        throw InputError("invalid vertex id '" + vertices[v] + "'");
      }
      if (!vid.emplace(vertices[v], v).second) {
        throw InputError("duplicate id '" + vertices[v] + "'");
      }
    }
    for (auto const& decl : edges) {
      if (!valid_id(decl.name)) {
        throw InputError("invalid edge id '" + decl.name + "'");
      }
      if (vid.count(decl.name) != 0 || seen_edges.count(decl.name) != 0) {
        throw InputError("duplicate id '" + decl.name + "'");
      }
      auto s = vid.find(decl.src);
      auto d = vid.find(decl.dst);
      if (s == vid.end() || d == vid.end()) {
        throw InputError("edge '" + decl.name + "' uses undeclared vertex '"
                         + (s == vid.end() ? decl.src : decl.dst) + "'");
      }
      auto e = static_cast<EdgeId>(_edges.size());
      seen_edges.emplace(decl.name, e);
      _edges.push_back(Edge{decl.name, s->second, d->second});
      _out[s->second].push_back(e);
      _in[d->second].push_back(e);
    }
    _rank.resize(_edges.size());
    std::size_t r = 0;
    for (auto const& [name, e] : seen_edges) {
      _rank[e] = r++;
    }
  }

  std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
    auto it = std::find(_vertices.begin(), _vertices.end(), name);
    if (it == _vertices.end()) {
      return std::nullopt;
    }
    return static_cast<VertexId>(it - _vertices.begin());
  }

  std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
    for (EdgeId e = 0; e < _edges.size(); ++e) {
      if (_edges[e].name == name) {
        return e;
      }
    }
    return std::nullopt;
  }

  Graph parse_graph(std::string_view text) {
    std::istringstream              in{std::string(text)};
    std::string                     line;
    std::size_t                     lineno = 0;
    std::vector<std::string>        vertices;
    std::vector<Graph::EdgeDecl>    edges;
    std::vector<std::size_t>        vertex_line;
    std::vector<std::size_t>        edge_line;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream       ls(line);
      std::vector<std::string> words;
      for (std::string w; ls >> w;) {
        words.push_back(w);
      }
      if (words.empty()) {
        continue;
      }
      auto fail = [&](std::string const& msg) {
        throw InputError("line " + std::to_string(lineno) + ": " + msg);
      };
      if (words[0] == "v") {
        if (words.size() != 2) {
          fail("expected 'v <id>'");
        }
        if (!valid_id(words[1])) {
          fail("invalid id '" + words[1] + "'");
        }
        vertices.push_back(words[1]);
        vertex_line.push_back(lineno);
      } else if (words[0] == "e") {
        if (words.size() != 4) {
          fail("expected 'e <id> <src> <dst>'");
        }
        for (std::size_t k = 1; k < 4; ++k) {
          if (!valid_id(words[k])) {
            fail("invalid id '" + words[k] + "'");
          }
        }
        edges.push_back({words[1], words[2], words[3]});
        edge_line.push_back(lineno);
      } else {
        fail("unknown directive '" + words[0] + "'");
      }
    }
    try {
      return Graph(vertices, edges);
    } catch (InputError const& err) {
      // Re-run the checks incrementally to attach the offending line.
      std::vector<std::string>     vs;
      std::vector<Graph::EdgeDecl> es;
      for (std::size_t k = 0; k < vertices.size(); ++k) {
        vs.push_back(vertices[k]);
        try {
          Graph(vs, {});
        } catch (InputError const& e) {
          throw InputError("line " + std::to_string(vertex_line[k]) + ": "
                           + e.what());
        }
      }
      for (std::size_t k = 0; k < edges.size(); ++k) {
        es.push_back(edges[k]);
        try {
          Graph(vs, es);
        } catch (InputError const& e) {
          throw InputError("line " + std::to_string(edge_line[k]) + ": "
                           + e.what());
        }
      }
      throw;
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Paths
  ////////////////////////////////////////////////////////////////////////

  Path make_path(Graph const& g, std::vector<EdgeId> edges) {
    if (edges.empty()) {
      throw InputError("make_path needs at least one edge; use Path::vertex");
    }
    for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
      if (g.edge(edges[k]).dst != g.edge(edges[k + 1]).src) {
        throw InputError("edges '" + g.edge(edges[k]).name + "' and '"
                         + g.edge(edges[k + 1]).name + "' do not compose");
      }
    }
    Path p;
    p.src   = g.edge(edges.front()).src;
    p.rng   = g.edge(edges.back()).dst;
    p.edges = std::move(edges);
    return p;
  }

  Path edge_path(Graph const& g, EdgeId e) {
    return Path{g.edge(e).src, g.edge(e).dst, {e}};
  }

  Path concat(Path const& a, Path const& b) {
    if (a.rng != b.src) {
      throw InputError("paths do not compose");
    }
    Path out{a.src, b.rng, a.edges};
    out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
    return out;
  }

  bool is_prefix(Path const& prefix, Path const& p) {
    return prefix.src == p.src && prefix.edges.size() <= p.edges.size()
           && std::equal(prefix.edges.begin(), prefix.edges.end(),
                         p.edges.begin());
  }

  Path remainder_after(Graph const& g, Path const& prefix, Path const& p) {
    if (!is_prefix(prefix, p)) {
      throw InputError("remainder_after: not a prefix");
    }
    if (prefix.length() == p.length()) {
      return Path::vertex(p.rng);
    }
    return make_path(g, std::vector<EdgeId>(p.edges.begin() + prefix.length(),
                                            p.edges.end()));
  }

  std::string to_string(Graph const& g, Path const& p) {
    if (p.is_vertex()) {
      return g.vertex_name(p.src);
    }
    std::string out;
    for (EdgeId e : p.edges) {
      if (!out.empty()) {
        out += '/';
      }
      out += g.edge(e).name;
    }
    return out;
  }

  Path parse_path(Graph const& g, std::string_view text) {
    std::vector<EdgeId> edges;
    std::size_t         start = 0;
    while (true) {
      std::size_t      slash = text.find('/', start);
      std::string_view id    = text.substr(start, slash == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : slash - start);
      if (auto e = g.find_edge(id)) {
        edges.push_back(*e);
      } else if (auto v = g.find_vertex(id)) {
        if (slash != std::string_view::npos || !edges.empty()) {
          throw InputError("vertex '" + std::string(id)
                           + "' cannot appear inside an edge path");
        }
        return Path::vertex(*v);
      } else {
        throw InputError("unknown id '" + std::string(id) + "'");
      }
      if (slash == std::string_view::npos) {
        break;
      }
      start = slash + 1;
    }
    return make_path(g, std::move(edges));
  }

  bool deterministic_less(Graph const& g, Path const& a, Path const& b) {
    if (a.length() != b.length()) {
      return a.length() < b.length();
    }
    if (lex_less_edges(g, a.edges, b.edges)) {
      return true;
    }
    if (lex_less_edges(g, b.edges, a.edges)) {
      return false;
    }
    return a.src < b.src;
  }

  Path canonical_rotation(Graph const& g, Path const& closed) {
    if (!closed.is_closed()) {
      throw InputError("path '" + to_string(g, closed) + "' is not closed");
    }
    if (closed.is_vertex()) {
      return closed;
    }
    std::vector<EdgeId> best = closed.edges;
    std::vector<EdgeId> rot  = closed.edges;
    for (std::size_t k = 1; k < rot.size(); ++k) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (lex_less_edges(g, rot, best)) {
        best = rot;
      }
    }
    return make_path(g, std::move(best));
  }

  ////////////////////////////////////////////////////////////////////////
  // Structure
  ////////////////////////////////////////////////////////////////////////

  std::vector<VertexId> sinks(Graph const& g) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (g.out_edges(v).empty()) {
        out.push_back(v);
      }
    }
    return out;
  }

  std::vector<VertexId> regular_vertices(Graph const& g) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!g.out_edges(v).empty()) {
        out.push_back(v);
      }
    }
    return out;
  }

  SccDecomposition strongly_connected_components(Graph const& g) {
    // Tarjan.
    std::size_t const        n = g.vertex_count();
    constexpr std::size_t    undefined = ~std::size_t(0);
    std::vector<std::size_t> index(n, undefined), low(n, 0);
    std::vector<bool>        on_stack(n, false);
    std::vector<VertexId>    stack;
    std::size_t              counter = 0;
    SccDecomposition         out;
    out.component_of.assign(n, 0);

    std::function<void(VertexId)> visit = [&](VertexId v) {
      index[v] = low[v] = counter++;
      stack.push_back(v);
      on_stack[v] = true;
      for (EdgeId e : g.out_edges(v)) {
        VertexId w = g.edge(e).dst;
        if (index[w] == undefined) {
          visit(w);
          low[v] = std::min(low[v], low[w]);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      }
      if (low[v] == index[v]) {
        std::vector<VertexId> comp;
        VertexId              w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          out.component_of[w] = out.components.size();
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        out.components.push_back(std::move(comp));
      }
    };
    for (VertexId v = 0; v < n; ++v) {
      if (index[v] == undefined) {
        visit(v);
      }
    }
    out.nontrivial.assign(out.components.size(), false);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      auto const& ed = g.edge(e);
      if (out.component_of[ed.src] == out.component_of[ed.dst]) {
        out.nontrivial[out.component_of[ed.src]] = true;
      }
    }
    return out;
  }

  std::vector<Path> cycles(Graph const& g) {
    auto              scc = strongly_connected_components(g);
    std::vector<Path> out;
    // Each simple cycle is found once, from its least vertex.
    for (VertexId start = 0; start < g.vertex_count(); ++start) {
      if (!scc.nontrivial[scc.component_of[start]]) {
        continue;
      }
      std::vector<bool>   on_path(g.vertex_count(), false);
      std::vector<EdgeId> edges;
      std::function<void(VertexId)> extend = [&](VertexId u) {
        for (EdgeId e : g.out_edges(u)) {
          VertexId w = g.edge(e).dst;
          if (w == start) {
            edges.push_back(e);
            out.push_back(canonical_rotation(g, make_path(g, edges)));
            edges.pop_back();
          } else if (w > start && !on_path[w]
                     && scc.component_of[w] == scc.component_of[start]) {
            on_path[w] = true;
            edges.push_back(e);
            extend(w);
            edges.pop_back();
            on_path[w] = false;
          }
        }
      };
      on_path[start] = true;
      extend(start);
    }
    std::sort(out.begin(), out.end(), [&](Path const& a, Path const& b) {
      return deterministic_less(g, a, b);
    });
    return out;
  }

  std::optional<ExitWitness> find_exit(Graph const& g) {
    for (Path const& c : cycles(g)) {
      for (EdgeId on : c.edges) {
        VertexId v = g.edge(on).src;
        for (EdgeId e : g.out_edges(v)) {
          if (e != on) {
            return ExitWitness{c, e};
          }
        }
      }
    }
    return std::nullopt;
  }

  bool is_no_exit(Graph const& g) {
    auto scc = strongly_connected_components(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (scc.nontrivial[scc.component_of[v]] && g.out_edges(v).size() != 1) {
        return false;
      }
    }
    return true;
  }

  bool infinite_paths_tame(Graph const& g) {
    auto                     scc = strongly_connected_components(g);
    std::vector<std::size_t> internal_out(g.vertex_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      auto const& ed = g.edge(e);
      if (scc.component_of[ed.src] == scc.component_of[ed.dst]) {
        ++internal_out[ed.src];
      }
    }
    for (std::size_t c = 0; c < scc.components.size(); ++c) {
      if (!scc.nontrivial[c]) {
        continue;
      }
      for (VertexId v : scc.components[c]) {
        if (internal_out[v] != 1) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<std::vector<bool>> reachability(Graph const& g) {
    std::size_t const              n = g.vertex_count();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (VertexId v = 0; v < n; ++v) {
      std::deque<VertexId> queue{v};
      reach[v][v] = true;
      while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (EdgeId e : g.out_edges(u)) {
          VertexId w = g.edge(e).dst;
          if (!reach[v][w]) {
            reach[v][w] = true;
            queue.push_back(w);
          }
        }
      }
    }
    return reach;
  }

  std::vector<Path> paths_into(Graph const&               g,
                               VertexId                   v,
                               std::optional<Path> const& forbid) {
    if (v >= g.vertex_count()) {
      throw InputError("vertex out of range");
    }
    if (forbid) {
      if (forbid->is_vertex() || !forbid->is_closed() || forbid->src != v) {
        throw PreconditionError(
            "paths_into: the forbidden cycle must be based at the target");
      }
    }
    // The family is finite iff no cycle other than `forbid` feeds v, and the
    // SCC of `forbid` is exactly that cycle.
    auto  scc   = strongly_connected_components(g);
    auto  reach = reachability(g);
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      if (!reach[u][v] || !scc.nontrivial[scc.component_of[u]]) {
        continue;
      }
      bool allowed = false;
      if (forbid && scc.component_of[u] == scc.component_of[v]) {
        auto const& comp     = scc.components[scc.component_of[v]];
        std::size_t internal = 0;
        for (VertexId w : comp) {
          for (EdgeId e : g.out_edges(w)) {
            internal += scc.component_of[g.edge(e).dst] == scc.component_of[v];
          }
        }
        allowed = internal == comp.size() && forbid->length() == comp.size();
      }
      if (!allowed) {
        throw PreconditionError("infinitely many paths end at '"
                                + g.vertex_name(v) + "': vertex '"
                                + g.vertex_name(u) + "' lies on a cycle");
      }
    }
    std::vector<Path> out;
    std::vector<EdgeId> reversed;  // edges from v backwards
    std::function<void(VertexId)> grow = [&](VertexId head) {
      if (reversed.empty()) {
        out.push_back(Path::vertex(v));
      } else {
        out.push_back(make_path(
            g, std::vector<EdgeId>(reversed.rbegin(), reversed.rend())));
      }
      for (EdgeId e : g.in_edges(head)) {
        reversed.push_back(e);
        bool contains = false;
        if (forbid && reversed.size() >= forbid->length()) {
          // New occurrences can only start at the front of the path.
          contains = std::equal(forbid->edges.begin(), forbid->edges.end(),
                                reversed.rbegin());
        }
        if (!contains) {
          grow(g.edge(e).src);
        }
        reversed.pop_back();
      }
    };
    grow(v);
    std::sort(out.begin(), out.end(), [&](Path const& a, Path const& b) {
      return deterministic_less(g, a, b);
    });
    return out;
  }

}  // namespace lpa
