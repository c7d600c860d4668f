#include "monoideal/betti.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <unordered_set>

#include "monoideal/polarize.hpp"

namespace monoideal {

namespace {

bool divides_vec(const ExpVec& g, const ExpVec& a) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] > a[i]) return false;
  return true;
}

ExpVec join_vec(const ExpVec& a, const ExpVec& b) {
  ExpVec j(a);
  for (std::size_t i = 0; i < b.size(); ++i) j[i] = std::max(j[i], b[i]);
  return j;
}

// Upper-Koszul homology at degree a: returns dim H~_{i-1}(K^a) keyed by i,
// i.e. the Betti numbers beta_{i,a}(I).  K^a has a face σ ⊆ supp(a) exactly
// when some generator divides x^a / x^σ; equivalently K^a is the union of
// the full simplices on supp(a) \ F_g, where F_g = { j : g_j = a_j } over
// the generators g dividing x^a.
std::map<int, long> koszul_betti_at(const std::vector<Monomial>& gens, const ExpVec& a,
                                    const FieldSpec& field, const ResourceCaps& caps) {
  std::vector<int> W;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0) W.push_back(static_cast<int>(i));
  int nw = static_cast<int>(W.size());
  if (nw == 0 || nw > 64)
    throw ResourceError("upper-Koszul support exceeds 64 variables", 64);
  std::uint64_t full = nw == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << nw) - 1;

  std::vector<std::uint64_t> Fs;
  for (const auto& g : gens) {
    if (!divides_vec(g.exps(), a)) continue;
    std::uint64_t F = 0;
    for (int j = 0; j < nw; ++j)
      if (g.exps()[static_cast<std::size_t>(W[j])] == a[static_cast<std::size_t>(W[j])])
        F |= std::uint64_t{1} << j;
    if (F == 0) return {};  // a strict divisor: K^a is the full simplex
    Fs.push_back(F);
  }
  if (Fs.empty()) return {};

  // keep only minimal F (maximal facets of K^a)
  std::sort(Fs.begin(), Fs.end(), [](std::uint64_t x, std::uint64_t y) {
    int px = std::popcount(x), py = std::popcount(y);
    return px != py ? px < py : x < y;
  });
  Fs.erase(std::unique(Fs.begin(), Fs.end()), Fs.end());
  std::vector<std::uint64_t> minF;
  for (auto F : Fs) {
    bool dominated = false;
    for (auto G : minF)
      if ((G & F) == G) {
        dominated = true;
        break;
      }
    if (!dominated) minF.push_back(F);
  }

  if (minF.size() == 1 && minF[0] == full) return {{0, 1}};  // K^a = {∅}: a is a generator

  std::uint64_t unionF = 0;
  bool all_singletons = true;
  for (auto F : minF) {
    unionF |= F;
    if (std::popcount(F) != 1) all_singletons = false;
  }
  if (unionF != full) return {};  // a vertex lies in every facet: cone, acyclic
  if (all_singletons) return {{nw - 1, 1}};  // boundary of the full simplex

  // facets of K^a
  std::vector<std::uint64_t> facets;
  facets.reserve(minF.size());
  for (auto F : minF) facets.push_back(full & ~F);

  // strong collapse: a vertex whose containing facets share another vertex
  // is dominated and can be deleted without changing the homotopy type
  {
    bool changed = true;
    while (changed) {
      changed = false;
      std::uint64_t verts = 0;
      for (auto T : facets) verts |= T;
      for (auto T : facets)
        if (T == verts) return {};  // a facet covers every vertex: contractible
      for (std::uint64_t m = verts; m; m &= m - 1) {
        std::uint64_t bit = m & (~m + 1);
        std::uint64_t inter = ~std::uint64_t{0};
        for (auto T : facets)
          if (T & bit) inter &= T;
        if ((inter & ~bit) != 0) {  // dominated
          for (auto& T : facets) T &= ~bit;
          // re-maximalize
          std::sort(facets.begin(), facets.end(), [](std::uint64_t a, std::uint64_t b) {
            int pa = std::popcount(a), pb = std::popcount(b);
            return pa != pb ? pa > pb : a < b;
          });
          facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
          std::vector<std::uint64_t> keep;
          for (auto T : facets) {
            bool sub = false;
            for (auto U : keep)
              if ((T & U) == T) {
                sub = true;
                break;
              }
            if (!sub) keep.push_back(T);
          }
          facets = std::move(keep);
          changed = true;
          break;
        }
      }
    }
  }
  if (facets.size() == 1) return {};  // a single simplex is contractible

  // direct route: enumerate the union of the facet power sets
  std::size_t direct_cost = 0;
  bool direct_ok = true;
  for (auto T : facets) {
    int t = std::popcount(T);
    if (t >= 40 || (direct_cost += std::size_t{1} << t) > caps.max_complex_faces) {
      direct_ok = false;
      break;
    }
  }
  FacesByDim faces;
  if (direct_ok) {
    std::unordered_set<std::uint64_t> seen;
    faces.resize(static_cast<std::size_t>(nw) + 1);
    for (auto T : facets) {
      std::uint64_t s = T;
      while (true) {
        if (seen.insert(s).second)
          faces[static_cast<std::size_t>(std::popcount(s))].push_back(s);
        if (s == 0) break;
        s = (s - 1) & T;
      }
    }
    while (!faces.empty() && faces.back().empty()) faces.pop_back();
    for (auto& level : faces) std::sort(level.begin(), level.end());
  } else if (facets.size() <= 20 &&
             (std::size_t{1} << facets.size()) <= caps.max_complex_faces) {
    // nerve route: the facets are simplices and all nonempty intersections
    // are simplices, so K^a is homotopy equivalent to the nerve
    int m = static_cast<int>(minF.size());
    std::vector<std::uint64_t> unions(std::size_t{1} << m, 0);
    faces.assign(static_cast<std::size_t>(m) + 1, {});
    faces[0].push_back(0);
    for (std::uint64_t S = 1; S < (std::uint64_t{1} << m); ++S) {
      std::uint64_t low = S & (~S + 1);
      int lowi = std::countr_zero(low);
      unions[S] = unions[S & ~low] | minF[static_cast<std::size_t>(lowi)];
      if (unions[S] != full)  // the facets indexed by S share a vertex
        faces[static_cast<std::size_t>(std::popcount(S))].push_back(S);
    }
    while (!faces.empty() && faces.back().empty()) faces.pop_back();
  } else {
    throw ResourceError("upper-Koszul complex at a lattice degree", caps.max_complex_faces);
  }

  auto dims = homology_from_faces(faces, field);
  std::map<int, long> out;
  for (std::size_t li = 0; li < dims.size(); ++li)
    if (dims[li] != 0) out[static_cast<int>(li)] = dims[li];  // i = (d+1), d = li-1
  return out;
}

}  // namespace

std::vector<ExpVec> lcm_lattice(const MonomialIdeal& I, const ResourceCaps& caps) {
  if (I.is_zero()) throw PreconditionError("lcm_lattice requires a nonzero ideal");
  std::vector<ExpVec> gens;
  for (const auto& g : I.gens())
    if (!g.is_one()) gens.push_back(g.exps());
  std::set<ExpVec> seen(gens.begin(), gens.end());
  std::deque<ExpVec> queue(gens.begin(), gens.end());
  while (!queue.empty()) {
    ExpVec a = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      ExpVec j = join_vec(a, g);
      if (seen.insert(j).second) {
        if (seen.size() > caps.max_lcm_lattice)
          throw ResourceError("lcm lattice", caps.max_lcm_lattice);
        queue.push_back(std::move(j));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

BettiTable betti_table(const MonomialIdeal& I, const FieldSpec& field,
                       const ResourceCaps& caps) {
  if (I.is_zero() || !I.is_proper())
    throw PreconditionError("betti_table requires a proper nonzero ideal");
  BettiTable table{field, I.nvars(), {}};
  table.entries[{0, ExpVec(static_cast<std::size_t>(I.nvars()), 0)}] = 1;
  for (const auto& a : lcm_lattice(I, caps)) {
    auto h = koszul_betti_at(I.gens(), a, field, caps);
    for (const auto& [i, v] : h) table.entries[{i + 1, a}] = v;  // R/I convention
  }
  return table;
}

MonomialIdeal alexander_dual(const MonomialIdeal& I) {
  auto primes = minimal_primes(I);
  std::vector<Monomial> gens;
  gens.reserve(primes.size());
  for (const auto& p : primes) {
    ExpVec e(static_cast<std::size_t>(I.nvars()), 0);
    for (int v : p.vars) e[static_cast<std::size_t>(v)] = 1;
    gens.emplace_back(I.context(), std::move(e));
  }
  return MonomialIdeal::from_generators(I.context(), std::move(gens));
}

HomologicalSummary homological_summary(const MonomialIdeal& I, const FieldSpec& field,
                                       const ResourceCaps& caps) {
  if (I.is_zero() || !I.is_proper())
    throw PreconditionError("homological_summary requires a proper nonzero ideal");
  HomologicalSummary s;
  s.field = field;
  s.krull_dim = I.nvars() - height(radical(I));

  long top_total;
  if (I.is_squarefree()) {
    auto table = betti_table(I, field, caps);
    s.pd = table.pd();
    s.depth = I.nvars() - s.pd;
    s.reg = table.reg();
    top_total = table.total(static_cast<int>(s.pd));
  } else {
    // polarize-then-Hochster: Fröberg's lemma transfers depth/pd (shifted
    // by |X_J|) and regularity (unchanged)
    auto pol = polarize_full(I);
    auto table = betti_table(pol.ideal, field, caps);
    s.pd = table.pd();
    s.depth = I.nvars() - s.pd;
    s.reg = table.reg();
    top_total = table.total(static_cast<int>(s.pd));
  }
  s.cohen_macaulay = s.depth == s.krull_dim;
  s.gorenstein = s.cohen_macaulay && top_total == 1;
  if (s.cohen_macaulay) s.a_invariant = s.reg - s.depth;
  return s;
}

bool terai_check(const MonomialIdeal& I, const FieldSpec& field, const ResourceCaps& caps) {
  if (!I.is_squarefree() || I.is_zero() || !I.is_proper())
    throw PreconditionError("terai_check requires a squarefree proper nonzero ideal");
  long lhs = betti_table(I, field, caps).reg() + 1;
  long rhs = betti_table(alexander_dual(I), field, caps).pd();
  return lhs == rhs;
}

DepthZeroWitness depth_zero_witness(const MonomialIdeal& I, const ResourceCaps& caps) {
  if (I.is_zero() || !I.is_proper())
    throw PreconditionError("depth_zero_witness requires a proper nonzero ideal");
  std::size_t n = static_cast<std::size_t>(I.nvars());
  std::vector<ExpVec> gens;
  for (const auto& g : I.gens()) gens.push_back(g.exps());

  auto try_candidate = [&](const ExpVec& a) -> std::optional<Monomial> {
    for (Exp e : a)
      if (e == 0) return std::nullopt;
    ExpVec w(a);
    for (auto& e : w) e -= 1;
    Monomial wm(I.context(), w);
    if (I.contains(wm)) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      ExpVec wx(w);
      wx[j] += 1;
      if (!I.contains(Monomial(I.context(), wx))) return std::nullopt;
    }
    return wm;
  };

  std::set<ExpVec> seen(gens.begin(), gens.end());
  std::deque<ExpVec> queue;
  for (const auto& g : gens) {
    if (auto w = try_candidate(g)) return {WitnessStatus::found, w};
    queue.push_back(g);
  }
  while (!queue.empty()) {
    ExpVec a = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      ExpVec j = join_vec(a, g);
      if (!seen.insert(j).second) continue;
      if (seen.size() > caps.max_lcm_lattice) return {WitnessStatus::inconclusive, {}};
      if (auto w = try_candidate(j)) return {WitnessStatus::found, w};
      queue.push_back(std::move(j));
    }
  }
  return {WitnessStatus::none, {}};
}

}  // namespace monoideal
