#ifndef LPA_GRAPHS_HPP_
#define LPA_GRAPHS_HPP_

// Finite directed graphs E = (E^0, E^1, s, r), finite paths, cycles and the
// structural predicates used by the trace results (sinks, no-exit,
// tameness of infinite paths).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lpa {

  using VertexId = std::uint32_t;
  using EdgeId   = std::uint32_t;

  struct Edge {
    std::string name;
    VertexId    src;
    VertexId    dst;
  };

  class Graph {
   public:
    struct EdgeDecl {
      std::string name;
      std::string src;
      std::string dst;
    };

    // Throws InputError on invalid or duplicate ids and undeclared
    // endpoints. Vertex and edge ids share one namespace.
    Graph(std::vector<std::string> const& vertices,
          std::vector<EdgeDecl> const&    edges);

    std::size_t vertex_count() const {
      return _vertices.size();
    }
    std::size_t edge_count() const {
      return _edges.size();
    }
    std::string const& vertex_name(VertexId v) const {
      return _vertices.at(v);
    }
    Edge const& edge(EdgeId e) const {
      return _edges.at(e);
    }
    std::optional<VertexId> find_vertex(std::string_view name) const;
    std::optional<EdgeId>   find_edge(std::string_view name) const;

    // Outgoing/incoming edges in declaration order.
    std::vector<EdgeId> const& out_edges(VertexId v) const {
      return _out.at(v);
    }
    std::vector<EdgeId> const& in_edges(VertexId v) const {
      return _in.at(v);
    }
    // Position of the edge among all edges sorted by id.
    std::size_t edge_rank(EdgeId e) const {
      return _rank.at(e);
    }

   private:
    std::vector<std::string>         _vertices;
    std::vector<Edge>                _edges;
    std::vector<std::vector<EdgeId>> _out;
    std::vector<std::vector<EdgeId>> _in;
    std::vector<std::size_t>         _rank;
  };

  // Line-based format: "v <id>", "e <id> <src> <dst>", '#' comments.
  Graph parse_graph(std::string_view text);

  // A finite path. Length-0 paths are vertices (src == rng); otherwise
  // consecutive edges compose and src/rng are s(e_1), r(e_n).
  struct Path {
    VertexId            src = 0;
    VertexId            rng = 0;
    std::vector<EdgeId> edges;

    static Path vertex(VertexId v) {
      return Path{v, v, {}};
    }
    std::size_t length() const {
      return edges.size();
    }
    bool is_vertex() const {
      return edges.empty();
    }
    bool is_closed() const {
      return src == rng;
    }

    friend auto operator<=>(Path const&, Path const&) = default;
    friend bool operator==(Path const&, Path const&)  = default;
  };

  // Throws InputError if the edges do not compose.
  Path make_path(Graph const& g, std::vector<EdgeId> edges);
  Path edge_path(Graph const& g, EdgeId e);
  // Throws InputError if r(a) != s(b).
  Path concat(Path const& a, Path const& b);
  // True iff `prefix` is an initial segment of `p` (a vertex is a prefix of
  // every path starting at it).
  bool is_prefix(Path const& prefix, Path const& p);
  // The path t with p = prefix t; requires is_prefix(prefix, p).
  Path remainder_after(Graph const& g, Path const& prefix, Path const& p);
  // Edge ids joined by '/', or the vertex id for length-0 paths.
  std::string to_string(Graph const& g, Path const& p);
  // Parses "id" or "id/id/...": a single vertex id or composable edges.
  Path parse_path(Graph const& g, std::string_view text);

  // (length, lexicographic edge ids), then source vertex.
  bool deterministic_less(Graph const& g, Path const& a, Path const& b);

  // Lexicographically least rotation (by edge id) of a closed path; a
  // vertex is its own canonical form. Throws InputError if not closed.
  Path canonical_rotation(Graph const& g, Path const& closed);

  std::vector<VertexId> sinks(Graph const& g);
  std::vector<VertexId> regular_vertices(Graph const& g);

  struct SccDecomposition {
    std::vector<std::vector<VertexId>> components;
    std::vector<std::size_t>           component_of;
    // A component is nontrivial if it contains an edge (so some cycle).
    std::vector<bool> nontrivial;
  };
  SccDecomposition strongly_connected_components(Graph const& g);

  // Every simple cycle once, in canonical rotation, sorted deterministically.
  std::vector<Path> cycles(Graph const& g);

  struct ExitWitness {
    Path   cycle;
    EdgeId exit;
  };
  // A cycle together with an edge leaving it, if any cycle has an exit.
  std::optional<ExitWitness> find_exit(Graph const& g);
  bool                       is_no_exit(Graph const& g);

  // Every infinite path ends in a sink or a cycle: each nontrivial SCC is a
  // single simple cycle.
  bool infinite_paths_tame(Graph const& g);

  // All paths ending at `v`, sorted deterministically. With `forbid` (a cycle
  // based at v), paths containing that cycle as a contiguous edge-subword
  // are excluded. Throws PreconditionError if the family would be infinite.
  std::vector<Path> paths_into(Graph const&               g,
                               VertexId                   v,
                               std::optional<Path> const& forbid = {});

  // reach[v][w] iff some path runs from v to w (including the vertex v).
  std::vector<std::vector<bool>> reachability(Graph const& g);

}  // namespace lpa

#endif  // LPA_GRAPHS_HPP_
