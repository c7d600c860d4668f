#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "monoideal/ideal.hpp"

namespace monoideal {

/// An antichain of nonempty vertex subsets over a context (isolated
/// vertices simply do not occur in any edge).  Minimal vertex covers are
/// computed once and memoized, since the dual, classification, transversal
/// finders and symbolic powers all need them.
class Clutter {
 public:
  static Clutter make(ContextPtr ctx, std::vector<std::uint64_t> edges);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<std::uint64_t>& edges() const { return edges_; }
  int nvars() const { return ctx_->size(); }

  /// Minimal vertex covers (memoized).
  const std::vector<std::uint64_t>& min_covers() const;

  bool operator==(const Clutter& o) const { return *ctx_ == *o.ctx_ && edges_ == o.edges_; }

 private:
  Clutter(ContextPtr ctx, std::vector<std::uint64_t> edges)
      : ctx_(std::move(ctx)), edges_(std::move(edges)), covers_(std::make_shared<CoverCache>()) {}
  struct CoverCache {
    std::mutex mu;
    std::optional<std::vector<std::uint64_t>> covers;
  };
  ContextPtr ctx_;
  std::vector<std::uint64_t> edges_;
  std::shared_ptr<CoverCache> covers_;
};

MonomialIdeal edge_ideal(const Clutter& c);

/// The clutter whose edge ideal has squarefree generators exactly the
/// supports of I's generators.
Clutter clutter_of_ideal(const MonomialIdeal& I);

/// Clutter of minimal vertex covers.
Clutter cover_dual(const Clutter& c);

/// Remove every edge that intersects V (the context is kept).
Clutter deletion(const Clutter& c, std::uint64_t vertex_set);

struct ClutterClassification {
  bool uniform = false;
  bool unmixed = false;
  /// Only evaluated for graphs (all edges of size 2): unmixed, no isolated
  /// vertices, and |V| = 2·height.
  std::optional<bool> very_well_covered;
};
ClutterClassification classify(const Clutter& c);

/// The three duality formulas for a squarefree monomial f:
///  (i)   (I(C)^∨ : f)^∨   = I(C \ supp f)
///  (ii)  (I(C) : f)^∨     = I(C^∨ \ supp f)
///  (iii) (I(C), x_i)^∨    = x_i · I(C \ {x_i})^∨   (f a variable)
/// All three must hold; falsity signals a bug.
struct DualityCheck {
  bool part_i = false;
  bool part_ii = false;
  std::optional<bool> part_iii;  // only when f is a single variable
};
DualityCheck duality_formulas_check(const Clutter& c, const Monomial& f);

/// 0/1 incidence matrix: rows = vertices, columns = edges.
struct IncidenceMatrix {
  int nrows = 0;
  int ncols = 0;
  std::vector<std::uint64_t> columns;  // column j = characteristic vector of edge j
  bool at(int i, int j) const { return columns[static_cast<std::size_t>(j)] >> i & 1; }
};
IncidenceMatrix incidence_matrix(const Clutter& c);

}  // namespace monoideal
