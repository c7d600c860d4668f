#pragma once

#include <cstddef>

namespace monoideal {

/// Resource caps for potentially explosive computations.  Every cap is a
/// hard bound; exceeding one raises ResourceError instead of thrashing.
struct ResourceCaps {
  /// Monomials allowed in any intermediate generating set (products,
  /// powers, symbolic-power intersections).
  std::size_t max_intermediate_monomials = 200000;
  /// Multidegrees in an lcm-lattice closure (also bounds the
  /// depth-zero-witness search).
  std::size_t max_lcm_lattice = 100000;
  /// Faces enumerated for a single simplicial complex.
  std::size_t max_complex_faces = std::size_t{1} << 22;
  /// Bases enumerated by set-covering-polyhedron vertex enumeration.
  std::size_t max_scp_bases = 5000000;
  /// Maximal cliques enumerated per graph.
  std::size_t max_cliques = 200000;
  /// Vertex budget for the strongly-perfect induced-subgraph sweep.
  int strongly_perfect_budget = 12;
};

inline const ResourceCaps& default_caps() {
  static const ResourceCaps caps{};
  return caps;
}

}  // namespace monoideal
