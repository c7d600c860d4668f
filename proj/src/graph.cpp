#include "monoideal/graph.hpp"

#include <algorithm>
#include <bit>

namespace monoideal {

namespace {

std::vector<int> mask_to_vec(std::uint64_t m) {
  std::vector<int> out;
  for (int v = 0; v < 64; ++v)
    if (m >> v & 1) out.push_back(v);
  return out;
}

}  // namespace

Graph Graph::make(ContextPtr ctx, std::vector<std::pair<int, int>> edges) {
  int n = ctx->size();
  if (n > 64) throw ResourceError("graphs require <= 64 vertices", 64);
  for (auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw PreconditionError("edge endpoint out of range");
    if (a == b) throw PreconditionError("loops are not allowed");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : edges) {
    adj[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
    adj[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
  }
  return Graph(std::move(ctx), std::move(edges), std::move(adj));
}

MonomialIdeal Graph::edge_ideal_of() const {
  std::vector<Monomial> gens;
  gens.reserve(edges_.size());
  for (auto [a, b] : edges_) {
    ExpVec e(static_cast<std::size_t>(nvars()), 0);
    e[static_cast<std::size_t>(a)] = 1;
    e[static_cast<std::size_t>(b)] = 1;
    gens.emplace_back(ctx_, std::move(e));
  }
  return MonomialIdeal::from_generators(ctx_, std::move(gens));
}

Clutter Graph::as_clutter() const {
  std::vector<std::uint64_t> es;
  es.reserve(edges_.size());
  for (auto [a, b] : edges_) es.push_back((std::uint64_t{1} << a) | (std::uint64_t{1} << b));
  return Clutter::make(ctx_, std::move(es));
}

Graph Graph::delete_vertices(std::uint64_t vs) const {
  std::vector<std::pair<int, int>> kept;
  for (auto [a, b] : edges_)
    if (!((vs >> a & 1) || (vs >> b & 1))) kept.emplace_back(a, b);
  return Graph::make(ctx_, std::move(kept));
}

namespace {

// Kuhn's augmenting-path matching on an explicit bipartition.
std::optional<std::vector<std::pair<int, int>>> bipartite_perfect_matching(
    const Graph& g, const std::vector<int>& color) {
  int n = g.nvars();
  std::vector<int> left, match_of(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v)
    if (color[static_cast<std::size_t>(v)] == 0) left.push_back(v);
  std::vector<char> used;
  auto try_kuhn = [&](auto&& self, int v) -> bool {
    for (int u : mask_to_vec(g.adjacency(v))) {
      if (used[static_cast<std::size_t>(u)]) continue;
      used[static_cast<std::size_t>(u)] = 1;
      if (match_of[static_cast<std::size_t>(u)] < 0 ||
          self(self, match_of[static_cast<std::size_t>(u)])) {
        match_of[static_cast<std::size_t>(u)] = v;
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (int v : left) {
    used.assign(static_cast<std::size_t>(n), 0);
    if (try_kuhn(try_kuhn, v)) ++matched;
  }
  if (2 * matched != n) return std::nullopt;
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    if (match_of[static_cast<std::size_t>(u)] >= 0) {
      int v = match_of[static_cast<std::size_t>(u)];
      out.emplace_back(std::min(u, v), std::max(u, v));
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Exact perfect matching on small general graphs: bitmask DP with
// reconstruction.
std::optional<std::vector<std::pair<int, int>>> dp_perfect_matching(const Graph& g) {
  int n = g.nvars();
  if (n % 2 != 0) return std::nullopt;
  if (n > 22) throw ResourceError("perfect-matching search requires <= 22 vertices", 22);
  std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<char> can(std::size_t{1} << n, 0);
  can[0] = 1;
  std::vector<int> partner(std::size_t{1} << n, -1);
  for (std::uint64_t s = 1; s <= full; ++s) {
    int v = std::countr_zero(s);  // match the lowest unfilled vertex
    std::uint64_t rest = s & ~(std::uint64_t{1} << v);
    for (std::uint64_t cand = g.adjacency(v) & rest; cand; cand &= cand - 1) {
      int u = std::countr_zero(cand);
      if (can[rest & ~(std::uint64_t{1} << u)]) {
        can[s] = 1;
        partner[s] = u;
        break;
      }
    }
  }
  if (!can[full]) return std::nullopt;
  std::vector<std::pair<int, int>> out;
  std::uint64_t s = full;
  while (s) {
    int v = std::countr_zero(s);
    int u = partner[s];
    out.emplace_back(std::min(u, v), std::max(u, v));
    s &= ~(std::uint64_t{1} << v);
    s &= ~(std::uint64_t{1} << u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

GraphStructure structure(const Graph& g) {
  int n = g.nvars();
  GraphStructure s;
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  bool all_bipartite = true;
  int nc = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[static_cast<std::size_t>(start)] >= 0) continue;
    std::vector<int> stack{start}, verts;
    comp[static_cast<std::size_t>(start)] = nc;
    color[static_cast<std::size_t>(start)] = 0;
    bool bip = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      verts.push_back(v);
      for (int u : mask_to_vec(g.adjacency(v))) {
        if (comp[static_cast<std::size_t>(u)] < 0) {
          comp[static_cast<std::size_t>(u)] = nc;
          color[static_cast<std::size_t>(u)] = color[static_cast<std::size_t>(v)] ^ 1;
          stack.push_back(u);
        } else if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
          bip = false;
        }
      }
    }
    std::sort(verts.begin(), verts.end());
    if (verts.size() == 1) {
      s.isolated.push_back(verts[0]);
    } else if (bip) {
      ++s.c0;
    }
    if (!bip) all_bipartite = false;
    s.components.push_back(std::move(verts));
    ++nc;
  }
  s.bipartite = all_bipartite;
  s.triangle_free = true;
  for (auto [a, b] : g.edges())
    if (g.adjacency(a) & g.adjacency(b)) {
      s.triangle_free = false;
      break;
    }
  s.limit_depth_formula = static_cast<long>(s.isolated.size()) + s.c0;
  if (n % 2 == 0 && s.isolated.empty()) {
    if (all_bipartite)
      s.perfect_matching = bipartite_perfect_matching(g, color);
    else
      s.perfect_matching = dp_perfect_matching(g);
  }
  return s;
}

bool graph_unmixed(const Graph& g) {
  if (g.edges().empty()) return true;
  return is_unmixed_ideal(g.edge_ideal_of());
}

ColonStructureReport colon_structure_check(const Graph& g, int var, long k,
                                           const FieldSpec& field, const ResourceCaps& caps) {
  if (k < 1) throw PreconditionError("colon_structure_check requires k >= 1");
  if (var < 0 || var >= g.nvars()) throw PreconditionError("vertex index out of range");
  MonomialIdeal I = g.edge_ideal_of();
  if (I.is_zero()) throw PreconditionError("edgeless graph");
  ContextPtr ctx = g.context();
  std::uint64_t N = g.neighbor_set(var);

  // neighbor variables as an ideal
  std::vector<Monomial> nbr;
  for (int v : mask_to_vec(N)) {
    ExpVec e(static_cast<std::size_t>(g.nvars()), 0);
    e[static_cast<std::size_t>(v)] = 1;
    nbr.emplace_back(ctx, std::move(e));
  }
  MonomialIdeal NG = MonomialIdeal::from_generators(ctx, nbr);
  Graph H = g.delete_vertices(N);
  MonomialIdeal IH = H.edge_ideal_of();

  ColonStructureReport r;
  // (b): (I : x_i) = (I(H), N)
  ExpVec xe(static_cast<std::size_t>(g.nvars()), 0);
  xe[static_cast<std::size_t>(var)] = 1;
  Monomial xi(ctx, xe);
  r.part_b = colon(I, xi) == sum(IH, NG);

  // (a): depth(R/(I^k : x_i^k)) <= depth(R/(I(H)^k, N))
  ExpVec xke(static_cast<std::size_t>(g.nvars()), 0);
  xke[static_cast<std::size_t>(var)] = k;
  Monomial xik(ctx, xke);
  MonomialIdeal Ik = power(I, k, caps);
  MonomialIdeal lhs = colon(Ik, xik);
  MonomialIdeal rhs = IH.is_zero() ? NG : sum(power(IH, k, caps), NG);
  r.depth_colon = homological_summary(lhs, field, caps).depth;
  r.depth_reduced = homological_summary(rhs, field, caps).depth;
  r.part_a = r.depth_colon <= r.depth_reduced;

  if (structure(g).bipartite) {
    MonomialIdeal cx = colon(I, xi);
    MonomialIdeal cxk = power(cx, k, caps);
    r.bipartite_colon_power_eq = colon(Ik, xik) == cxk;
    if (cx.is_proper() && !cx.is_zero() && cx.is_squarefree())
      r.bipartite_symbolic_eq = cxk == symbolic_power(cx, k, caps);
  }
  return r;
}

Clutter clique_clutter(const Graph& g, const ResourceCaps& caps) {
  int n = g.nvars();
  std::vector<std::uint64_t> cliques;
  // Bron–Kerbosch with pivoting
  auto bk = [&](auto&& self, std::uint64_t R, std::uint64_t P, std::uint64_t X) -> void {
    if (P == 0 && X == 0) {
      if (R != 0) {
        cliques.push_back(R);
        if (cliques.size() > caps.max_cliques)
          throw ResourceError("maximal clique enumeration", caps.max_cliques);
      }
      return;
    }
    // pivot: vertex of P ∪ X with most neighbors in P
    int pivot = -1, best = -1;
    for (std::uint64_t m = P | X; m; m &= m - 1) {
      int v = std::countr_zero(m);
      int deg = std::popcount(g.adjacency(v) & P);
      if (deg > best) {
        best = deg;
        pivot = v;
      }
    }
    std::uint64_t ext = P & ~g.adjacency(pivot);
    for (std::uint64_t m = ext; m; m &= m - 1) {
      int v = std::countr_zero(m);
      std::uint64_t bit = std::uint64_t{1} << v;
      self(self, R | bit, P & g.adjacency(v), X & g.adjacency(v));
      P &= ~bit;
      X |= bit;
    }
  };
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  // only vertices that occur in an edge or stand alone as maximal cliques
  bk(bk, 0, all, 0);
  return Clutter::make(g.context(), std::move(cliques));
}

namespace {

// maximal independent sets = maximal cliques of the complement
std::vector<std::uint64_t> maximal_independent_sets(const Graph& g, const ResourceCaps& caps) {
  int n = g.nvars();
  std::vector<std::pair<int, int>> co;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!g.has_edge(a, b)) co.emplace_back(a, b);
  Graph comp = Graph::make(g.context(), std::move(co));
  auto cl = clique_clutter(comp, caps);
  return cl.edges();
}

std::optional<std::vector<int>> certificate_for(const Graph& g,
                                                const std::vector<std::uint64_t>& cliques,
                                                const ResourceCaps& caps) {
  for (auto mis : maximal_independent_sets(g, caps)) {
    bool ok = true;
    for (auto q : cliques)
      if (std::popcount(q & mis) != 1) {
        ok = false;
        break;
      }
    if (ok) return mask_to_vec(mis);
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> strongly_perfect_certificate(const Graph& g,
                                                             const ResourceCaps& caps) {
  return certificate_for(g, clique_clutter(g, caps).edges(), caps);
}

StronglyPerfectReport is_strongly_perfect(const Graph& g, int budget_vertices,
                                          const ResourceCaps& caps) {
  int n = g.nvars();
  StronglyPerfectReport rep;
  if (n > budget_vertices) {
    rep.verdict = TriState::inconclusive;
    return rep;
  }
  std::uint64_t all = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t keep = 1; keep <= all; ++keep) {
    Graph h = g.delete_vertices(all & ~keep);
    // restrict the clique clutter to the kept vertices (deleted vertices
    // are isolated in h, so drop their singleton cliques)
    std::vector<std::uint64_t> cliques;
    Clutter hcl = clique_clutter(h, caps);
    for (auto q : hcl.edges())
      if ((q & ~keep) == 0) cliques.push_back(q);
    // independent sets must also live inside `keep`
    std::vector<std::pair<int, int>> co;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if ((keep >> a & 1) && (keep >> b & 1) && !h.has_edge(a, b)) co.emplace_back(a, b);
    bool found = false;
    Graph hc = Graph::make(g.context(), std::move(co));
    Clutter hccl = clique_clutter(hc, caps);
    for (auto mis : hccl.edges()) {
      if ((mis & ~keep) != 0) continue;
      bool ok = true;
      for (auto q : cliques)
        if (std::popcount(q & mis) != 1) {
          ok = false;
          break;
        }
      if (ok) {
        found = true;
        break;
      }
    }
    if (!found) {
      rep.verdict = TriState::no;
      rep.witness_subgraph = mask_to_vec(keep);
      return rep;
    }
  }
  rep.verdict = TriState::yes;
  return rep;
}

StronglyPerfectSymbolicReport strongly_perfect_symbolic_check(const Graph& g, long K,
                                                              const FieldSpec& field,
                                                              const ResourceCaps& caps) {
  auto cert = strongly_perfect_certificate(g, caps);
  if (!cert)
    throw PreconditionError("no strongly-perfect certificate for the graph itself");
  Clutter cl = clique_clutter(g, caps);
  MonomialIdeal J = edge_ideal(cover_dual(cl));

  ExpVec fe(static_cast<std::size_t>(g.nvars()), 0);
  for (int v : *cert) fe[static_cast<std::size_t>(v)] = 1;
  Monomial f(g.context(), std::move(fe));

  StronglyPerfectSymbolicReport rep{*cert, true, {}};
  for (long k = 1; k + 1 <= K; ++k) {
    if (!(colon(symbolic_power(J, k + 1, caps), f) == symbolic_power(J, k, caps))) {
      rep.colon_identities = false;
      break;
    }
  }
  rep.sequences = monotone_sequences(J, K, PowerMode::symbolic, field, caps);
  return rep;
}

CmSquareReport cm_square_predicates(const Graph& g, const FieldSpec& field,
                                    const ResourceCaps& caps) {
  auto st = structure(g);
  if (!st.isolated.empty())
    throw PreconditionError("cm_square_predicates requires a graph without isolated vertices");
  if (g.edges().empty()) throw PreconditionError("edgeless graph");
  CmSquareReport r;

  bool deletions_unmixed = true;
  for (int v = 0; v < g.nvars() && deletions_unmixed; ++v)
    if (!graph_unmixed(g.delete_vertices(std::uint64_t{1} << v))) deletions_unmixed = false;
  r.combinatorial_cm2 = st.triangle_free && graph_unmixed(g) && deletions_unmixed;

  MonomialIdeal I2 = power(g.edge_ideal_of(), 2, caps);
  auto s = homological_summary(I2, field, caps);
  r.depth_square = s.depth;
  r.homological_cm2 = s.cohen_macaulay;

  // a triangle whose neighborhood dominates every outside vertex
  r.depth_zero_triangle = false;
  int n = g.nvars();
  for (auto [a, b] : g.edges()) {
    for (std::uint64_t m = g.adjacency(a) & g.adjacency(b); m; m &= m - 1) {
      int c = std::countr_zero(m);
      std::uint64_t tri = (std::uint64_t{1} << a) | (std::uint64_t{1} << b) |
                          (std::uint64_t{1} << c);
      std::uint64_t dominated =
          tri | g.adjacency(a) | g.adjacency(b) | g.adjacency(c);
      std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
      if (dominated == all) {
        r.depth_zero_triangle = true;
        break;
      }
    }
    if (r.depth_zero_triangle) break;
  }

  r.agree = (r.combinatorial_cm2 == r.homological_cm2) &&
            (!r.depth_zero_triangle || r.depth_square == 0);
  return r;
}

VeryWellCoveredReport very_well_covered_check(const Graph& g, long K, const FieldSpec& field,
                                              const ResourceCaps& caps) {
  auto cls = classify(g.as_clutter());
  if (!cls.very_well_covered.value_or(false))
    throw PreconditionError("graph is not very well-covered");
  auto st = structure(g);
  if (!st.perfect_matching)
    throw Error("very well-covered graph without a perfect matching: invariant violation");

  VeryWellCoveredReport rep;
  rep.matching_edge = st.perfect_matching->front();
  MonomialIdeal I = g.edge_ideal_of();
  ExpVec fe(static_cast<std::size_t>(g.nvars()), 0);
  fe[static_cast<std::size_t>(rep.matching_edge.first)] = 1;
  fe[static_cast<std::size_t>(rep.matching_edge.second)] = 1;
  Monomial xe(g.context(), std::move(fe));

  rep.colon_identities = true;
  for (long k = 1; k + 1 <= K; ++k)
    if (!(colon(symbolic_power(I, k + 1, caps), xe) == symbolic_power(I, k, caps))) {
      rep.colon_identities = false;
      break;
    }
  rep.sequences = monotone_sequences(I, K, PowerMode::symbolic, field, caps);
  return rep;
}

WeightedCmReport weighted_cm_reduction_check(const WeightedDigraph& d, const FieldSpec& field,
                                             const ResourceCaps& caps) {
  WeightedCmReport r;
  r.cm_original = homological_summary(weighted_digraph_ideal(d), field, caps).cohen_macaulay;
  r.cm_reduced =
      homological_summary(weighted_digraph_ideal(weight_reduce(d)), field, caps).cohen_macaulay;
  r.equal = r.cm_original == r.cm_reduced;
  return r;
}

}  // namespace monoideal
