#include "monoideal/digraph.hpp"

#include <algorithm>

namespace monoideal {

WeightedDigraph WeightedDigraph::make(ContextPtr ctx, std::vector<std::pair<int, int>> arcs,
                                      std::vector<Exp> weights) {
  int n = ctx->size();
  if (static_cast<int>(weights.size()) != n)
    throw PreconditionError("weight vector length does not match context");
  for (Exp w : weights)
    if (w < 1) throw PreconditionError("vertex weights must be >= 1");
  for (auto [a, b] : arcs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw PreconditionError("arc endpoint out of range");
    if (a == b) throw PreconditionError("loops are not allowed");
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return WeightedDigraph{std::move(ctx), std::move(arcs), std::move(weights)};
}

MonomialIdeal weighted_digraph_ideal(const WeightedDigraph& d) {
  std::vector<Monomial> gens;
  gens.reserve(d.arcs.size());
  for (auto [i, j] : d.arcs) {
    ExpVec e(static_cast<std::size_t>(d.ctx->size()), 0);
    e[static_cast<std::size_t>(i)] = 1;
    e[static_cast<std::size_t>(j)] = checked_add(e[static_cast<std::size_t>(j)],
                                                 d.weights[static_cast<std::size_t>(j)]);
    gens.emplace_back(d.ctx, std::move(e));
  }
  return MonomialIdeal::from_generators(d.ctx, std::move(gens));
}

WeightedDigraph weight_reduce(const WeightedDigraph& d) {
  WeightedDigraph u = d;
  for (auto& w : u.weights)
    if (w >= 2) w = 2;
  return u;
}

}  // namespace monoideal
