#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <vector>

#include "monoideal/caps.hpp"
#include "monoideal/clutter.hpp"

namespace monoideal {

using Rational = boost::multiprecision::mpq_rational;

/// Vertices of the set covering polyhedron Q(A) = { x >= 0 : xA >= 1 },
/// enumerated exactly.  `integral` is true iff every coordinate of every
/// vertex is an integer; otherwise `fractional_witness` holds one
/// fractional vertex.
struct ScpReport {
  std::vector<std::vector<Rational>> vertices;  // sorted, deduplicated
  bool integral = true;
  std::optional<std::vector<Rational>> fractional_witness;
};

/// Exact vertex enumeration by basis enumeration: every n-subset of the
/// n + r constraint rows is solved in rational arithmetic; feasible basic
/// solutions are the vertices.
ScpReport scp_vertices(const IncidenceMatrix& a,
                       const ResourceCaps& caps = default_caps());

}  // namespace monoideal
