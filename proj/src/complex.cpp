#include "monoideal/complex.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "monoideal/linalg.hpp"

namespace monoideal {

SimplicialComplex SimplicialComplex::from_facets(ContextPtr ctx,
                                                 std::vector<std::uint64_t> facets) {
  if (ctx->size() > 64)
    throw ResourceError("simplicial complexes require <= 64 vertices", 64);
  // maximalize to an antichain
  std::sort(facets.begin(), facets.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  std::vector<std::uint64_t> keep;
  for (auto f : facets) {
    bool contained = false;
    for (auto g : keep)
      if ((f & g) == f) {
        contained = true;
        break;
      }
    if (!contained) keep.push_back(f);
  }
  std::sort(keep.begin(), keep.end());
  return SimplicialComplex(std::move(ctx), std::move(keep), true);
}

int SimplicialComplex::dim() const {
  if (is_void()) return -2;
  int d = -1;
  for (auto f : facets_) d = std::max(d, std::popcount(f) - 1);
  return d;
}

FacesByDim SimplicialComplex::faces_by_dim(const ResourceCaps& caps) const {
  FacesByDim out;
  if (is_void()) return out;
  out.resize(static_cast<std::size_t>(dim()) + 2);
  std::unordered_set<std::uint64_t> seen;
  for (auto f : facets_) {
    // enumerate all subsets of each facet
    std::uint64_t s = f;
    while (true) {
      if (seen.insert(s).second) {
        if (seen.size() > caps.max_complex_faces)
          throw ResourceError("complex face enumeration", caps.max_complex_faces);
        out[static_cast<std::size_t>(std::popcount(s))].push_back(s);
      }
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  for (auto& level : out) std::sort(level.begin(), level.end());
  return out;
}

SimplicialComplex SimplicialComplex::link(std::uint64_t face) const {
  std::vector<std::uint64_t> lk;
  for (auto f : facets_)
    if ((f & face) == face) lk.push_back(f & ~face);
  return from_facets(ctx_, std::move(lk));
}

SimplicialComplex SimplicialComplex::skeleton(int i, const ResourceCaps& caps) const {
  if (is_void()) return *this;
  if (i >= dim()) return *this;
  if (i < -1) throw PreconditionError("skeleton index below -1");
  auto faces = faces_by_dim(caps);
  std::vector<std::uint64_t> fac;
  if (i + 1 < static_cast<int>(faces.size()))
    fac = faces[static_cast<std::size_t>(i) + 1];
  for (auto f : facets_)
    if (std::popcount(f) - 1 < i) fac.push_back(f);
  return from_facets(ctx_, std::move(fac));
}

SimplicialComplex stanley_reisner(const MonomialIdeal& I) {
  if (!I.is_squarefree())
    throw PreconditionError("stanley_reisner requires a squarefree ideal");
  if (!I.is_proper())
    throw PreconditionError("stanley_reisner requires a proper ideal");
  int n = I.nvars();
  if (I.is_zero()) {
    // no non-faces: the full simplex
    std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return SimplicialComplex::from_facets(I.context(), {full});
  }
  std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  // facets = complements of the minimal transversals of generator supports
  std::vector<std::uint64_t> supports;
  supports.reserve(I.gens().size());
  for (const auto& g : I.gens()) supports.push_back(g.support_mask());
  auto covers = minimal_transversals(supports, n);
  std::vector<std::uint64_t> facets;
  facets.reserve(covers.size());
  for (auto c : covers) facets.push_back(full & ~c);
  return SimplicialComplex::from_facets(I.context(), std::move(facets));
}

MonomialIdeal complex_to_ideal(const SimplicialComplex& c) {
  int n = c.context()->size();
  std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  if (c.is_void()) return MonomialIdeal::unit(c.context());
  for (auto f : c.facets())
    if (f == full) return MonomialIdeal::zero(c.context());
  // minimal non-faces = minimal transversals of facet complements
  std::vector<std::uint64_t> co;
  co.reserve(c.facets().size());
  for (auto f : c.facets()) co.push_back(full & ~f);
  auto nonfaces = minimal_transversals(co, n);
  std::vector<Monomial> gens;
  gens.reserve(nonfaces.size());
  for (auto m : nonfaces) {
    ExpVec e(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
      if (m >> v & 1) e[v] = 1;
    gens.emplace_back(c.context(), std::move(e));
  }
  return MonomialIdeal::from_generators(c.context(), std::move(gens));
}

std::vector<long> homology_from_faces(const FacesByDim& faces, const FieldSpec& field) {
  if (faces.empty()) return {};
  int levels = static_cast<int>(faces.size());
  // rank of the boundary map leaving each level
  std::vector<long> bd_rank(static_cast<std::size_t>(levels) + 1, 0);
  for (int li = 1; li < levels; ++li) {
    const auto& here = faces[li];
    const auto& below = faces[li - 1];
    if (here.empty() || below.empty()) continue;
    SparseIntMatrix m;
    m.ncols = static_cast<int>(below.size());
    m.rows.reserve(here.size());
    for (auto f : here) {
      std::vector<std::pair<int, int>> row;
      int sign = 1;
      for (std::uint64_t rest = f; rest; rest &= rest - 1) {
        std::uint64_t bit = rest & (~rest + 1);
        std::uint64_t sub = f & ~bit;
        auto it = std::lower_bound(below.begin(), below.end(), sub);
        if (it != below.end() && *it == sub)
          row.emplace_back(static_cast<int>(it - below.begin()), sign);
        sign = -sign;
      }
      std::sort(row.begin(), row.end());
      m.rows.push_back(std::move(row));
    }
    bd_rank[li] = rank(m, field);
  }
  std::vector<long> dims(static_cast<std::size_t>(levels), 0);
  for (int li = 0; li < levels; ++li)
    dims[li] = static_cast<long>(faces[li].size()) - bd_rank[li] - bd_rank[li + 1];
  return dims;
}

std::vector<long> reduced_homology_dims(const SimplicialComplex& c, const FieldSpec& field,
                                        const ResourceCaps& caps) {
  return homology_from_faces(c.faces_by_dim(caps), field);
}

bool is_cohen_macaulay_complex(const SimplicialComplex& c, const FieldSpec& field,
                               const ResourceCaps& caps) {
  if (c.is_void()) throw PreconditionError("Reisner criterion on the void complex");
  auto faces = c.faces_by_dim(caps);
  for (const auto& level : faces) {
    for (auto sigma : level) {
      auto lk = c.link(sigma);
      int d = lk.dim();
      if (d <= -1) continue;
      auto h = reduced_homology_dims(lk, field, caps);
      for (int j = -1; j < d; ++j)
        if (h[static_cast<std::size_t>(j) + 1] != 0) return false;
    }
  }
  return true;
}

long skeleton_depth(const MonomialIdeal& I, const FieldSpec& field, const ResourceCaps& caps) {
  if (!I.is_squarefree() || I.is_zero() || !I.is_proper())
    throw PreconditionError("skeleton_depth requires a squarefree proper nonzero ideal");
  auto delta = stanley_reisner(I);
  for (int i = delta.dim(); i >= -1; --i) {
    if (is_cohen_macaulay_complex(delta.skeleton(i, caps), field, caps))
      return i + 1;
  }
  return 0;  // unreachable: the (-1)-skeleton {∅} is Cohen–Macaulay
}

}  // namespace monoideal
