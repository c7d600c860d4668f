#pragma once

#include <vector>

#include "monoideal/ideal.hpp"

namespace monoideal {

/// A vertex-weighted digraph: arcs (tail, head) with a positive weight d_i
/// on every vertex.
struct WeightedDigraph {
  ContextPtr ctx;
  std::vector<std::pair<int, int>> arcs;  // no loops, deduplicated, sorted
  std::vector<Exp> weights;               // per vertex, all >= 1

  static WeightedDigraph make(ContextPtr ctx, std::vector<std::pair<int, int>> arcs,
                              std::vector<Exp> weights);
};

/// I(D) = ( x_i x_j^{d_j} | (x_i, x_j) an arc ).
MonomialIdeal weighted_digraph_ideal(const WeightedDigraph& d);

/// Every weight >= 2 becomes exactly 2.  Cohen–Macaulayness of the two
/// edge ideals agrees.
WeightedDigraph weight_reduce(const WeightedDigraph& d);

}  // namespace monoideal
