#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monoideal/betti.hpp"
#include "monoideal/clutter.hpp"
#include "monoideal/digraph.hpp"
#include "monoideal/powers.hpp"

namespace monoideal {

/// A finite simple graph on the context's variables.
class Graph {
 public:
  static Graph make(ContextPtr ctx, std::vector<std::pair<int, int>> edges);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int nvars() const { return ctx_->size(); }
  std::uint64_t adjacency(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::uint64_t neighbor_set(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool has_edge(int a, int b) const { return adj_[static_cast<std::size_t>(a)] >> b & 1; }

  MonomialIdeal edge_ideal_of() const;
  Clutter as_clutter() const;

  /// Remove a vertex set: edges meeting it disappear (context kept).
  Graph delete_vertices(std::uint64_t vs) const;

 private:
  Graph(ContextPtr ctx, std::vector<std::pair<int, int>> edges, std::vector<std::uint64_t> adj)
      : ctx_(std::move(ctx)), edges_(std::move(edges)), adj_(std::move(adj)) {}
  ContextPtr ctx_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::uint64_t> adj_;
};

/// Components, bipartiteness, triangles, matchings and the limit-depth
/// formula |isol(G)| + c0(G).
struct GraphStructure {
  std::vector<std::vector<int>> components;  // sorted vertex lists
  std::vector<int> isolated;
  int c0 = 0;  // non-trivial bipartite components
  bool bipartite = false;
  bool triangle_free = false;
  std::optional<std::vector<std::pair<int, int>>> perfect_matching;
  long limit_depth_formula = 0;  // |isol| + c0 = dim R - ℓ(I(G))
};
GraphStructure structure(const Graph& g);

/// Checks the colon identities around a vertex power:
///  (a) depth(R/(I^k : x_i^k)) <= depth(R/(I(G∖N(x_i))^k, N(x_i)))
///  (b) (I : x_i) = (I(G∖N(x_i)), N(x_i))
/// and, for bipartite G, (I:x_i)^k = (I:x_i)^(k) and (I^k : x_i^k) = (I:x_i)^k.
struct ColonStructureReport {
  long depth_colon = 0;
  long depth_reduced = 0;
  bool part_a = false;
  bool part_b = false;
  std::optional<bool> bipartite_symbolic_eq;
  std::optional<bool> bipartite_colon_power_eq;
};
ColonStructureReport colon_structure_check(const Graph& g, int var, long k,
                                           const FieldSpec& field,
                                           const ResourceCaps& caps = default_caps());

/// Clutter of maximal cliques (Bron–Kerbosch with pivoting).
Clutter clique_clutter(const Graph& g, const ResourceCaps& caps = default_caps());

/// A maximal independent set meeting every maximal clique exactly once,
/// if one exists.
std::optional<std::vector<int>> strongly_perfect_certificate(const Graph& g,
                                                             const ResourceCaps& caps = default_caps());

enum class TriState { yes, no, inconclusive };
struct StronglyPerfectReport {
  TriState verdict = TriState::inconclusive;
  std::optional<std::vector<int>> witness_subgraph;  // induced subgraph lacking a certificate
};
/// Checks the certificate on every induced subgraph, up to the vertex
/// budget (the definition quantifies over all induced subgraphs).
StronglyPerfectReport is_strongly_perfect(const Graph& g, int budget_vertices,
                                          const ResourceCaps& caps = default_caps());

/// For strongly perfect G and J the cover ideal of cl(G): verifies
/// (J^(k+1) : f) = J^(k) for the certificate's monomial f, and reports the
/// symbolic depth/reg sequences.
struct StronglyPerfectSymbolicReport {
  std::vector<int> certificate;
  bool colon_identities = false;
  MonotoneReport sequences;
};
StronglyPerfectSymbolicReport strongly_perfect_symbolic_check(const Graph& g, long K,
                                                              const FieldSpec& field,
                                                              const ResourceCaps& caps = default_caps());

/// Cohen–Macaulayness of I(G)^2, combinatorial vs homological, plus the
/// depth-zero triangle criterion.
struct CmSquareReport {
  bool combinatorial_cm2 = false;  // triangle-free, unmixed, all single-vertex deletions unmixed
  bool homological_cm2 = false;    // depth(R/I^2) == dim
  bool depth_zero_triangle = false;
  long depth_square = 0;
  bool agree = false;
};
CmSquareReport cm_square_predicates(const Graph& g, const FieldSpec& field,
                                    const ResourceCaps& caps = default_caps());

/// For very well-covered G: a perfect-matching edge e satisfies
/// (I^(k+1) : x_e) = I^(k); symbolic regularity is non-decreasing.
struct VeryWellCoveredReport {
  std::pair<int, int> matching_edge{-1, -1};
  bool colon_identities = false;
  MonotoneReport sequences;
};
VeryWellCoveredReport very_well_covered_check(const Graph& g, long K, const FieldSpec& field,
                                              const ResourceCaps& caps = default_caps());

/// CM(I(D)) must agree with CM of the weight-2 reduction.
struct WeightedCmReport {
  bool cm_original = false;
  bool cm_reduced = false;
  bool equal = false;
};
WeightedCmReport weighted_cm_reduction_check(const WeightedDigraph& d, const FieldSpec& field,
                                             const ResourceCaps& caps = default_caps());

/// Unmixedness of a graph's covers; edgeless graphs count as unmixed.
bool graph_unmixed(const Graph& g);

}  // namespace monoideal
