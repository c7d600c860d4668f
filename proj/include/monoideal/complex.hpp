#pragma once

#include <cstdint>
#include <vector>

#include "monoideal/caps.hpp"
#include "monoideal/field.hpp"
#include "monoideal/ideal.hpp"

namespace monoideal {

/// Faces of a complex grouped by dimension: index d+1 holds the sorted
/// masks of the d-faces (index 0 is the empty face when present).
using FacesByDim = std::vector<std::vector<std::uint64_t>>;

/// A simplicial complex on the context's variables, stored by facets.
/// The void complex (no faces at all) has an empty facet list; the
/// irrelevant complex {∅} has the single facet ∅.
class SimplicialComplex {
 public:
  static SimplicialComplex from_facets(ContextPtr ctx, std::vector<std::uint64_t> facets);
  static SimplicialComplex void_complex(ContextPtr ctx) {
    return SimplicialComplex(std::move(ctx), {}, true);
  }
  static SimplicialComplex irrelevant_complex(ContextPtr ctx) {
    return SimplicialComplex(std::move(ctx), {0}, true);
  }

  const ContextPtr& context() const { return ctx_; }
  const std::vector<std::uint64_t>& facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }
  bool is_irrelevant() const { return facets_.size() == 1 && facets_[0] == 0; }

  /// Largest facet size minus one; -2 for the void complex.
  int dim() const;

  FacesByDim faces_by_dim(const ResourceCaps& caps = default_caps()) const;

  SimplicialComplex link(std::uint64_t face) const;
  SimplicialComplex skeleton(int i, const ResourceCaps& caps = default_caps()) const;

  bool operator==(const SimplicialComplex& o) const {
    return *ctx_ == *o.ctx_ && facets_ == o.facets_;
  }

 private:
  SimplicialComplex(ContextPtr ctx, std::vector<std::uint64_t> facets, bool)
      : ctx_(std::move(ctx)), facets_(std::move(facets)) {}
  ContextPtr ctx_;
  std::vector<std::uint64_t> facets_;
};

/// Stanley–Reisner complex of a squarefree proper ideal: minimal non-faces
/// are exactly the generator supports.
SimplicialComplex stanley_reisner(const MonomialIdeal& I);

/// Inverse of stanley_reisner: the ideal of minimal non-faces.
MonomialIdeal complex_to_ideal(const SimplicialComplex& c);

/// Reduced homology dimensions over F; index i+1 holds dim H~_i, for
/// i = -1..dim.  The irrelevant complex has H~_{-1} = 1; the void complex
/// has no homology (empty vector).
std::vector<long> reduced_homology_dims(const SimplicialComplex& c, const FieldSpec& field,
                                        const ResourceCaps& caps = default_caps());

/// Same, from an explicit face list (shared with the Betti machinery).
std::vector<long> homology_from_faces(const FacesByDim& faces, const FieldSpec& field);

/// Reisner criterion: for every face σ (including ∅),
/// H~_j(link σ) = 0 for all j < dim(link σ).
bool is_cohen_macaulay_complex(const SimplicialComplex& c, const FieldSpec& field,
                               const ResourceCaps& caps = default_caps());

/// depth(R/I) for squarefree proper nonzero I, located as 1 + the largest
/// i whose i-skeleton is Cohen–Macaulay over F.
long skeleton_depth(const MonomialIdeal& I, const FieldSpec& field,
                    const ResourceCaps& caps = default_caps());

}  // namespace monoideal
