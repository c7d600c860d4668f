#pragma once

#include <map>
#include <optional>
#include <vector>

#include "monoideal/complex.hpp"
#include "monoideal/field.hpp"
#include "monoideal/ideal.hpp"

namespace monoideal {

/// Multigraded Betti numbers of R/I over a field, keyed by
/// (homological index i, multidegree a); β_{0,0} = 1 is always present.
/// pd, depth, reg and the a-invariant read off the table.
struct BettiTable {
  FieldSpec field;
  int nvars = 0;
  std::map<std::pair<int, ExpVec>, long> entries;

  long pd() const {
    long p = 0;
    for (const auto& [key, v] : entries) p = std::max<long>(p, key.first);
    return p;
  }
  long depth() const { return nvars - pd(); }  // Auslander–Buchsbaum
  long reg() const {
    long r = 0;
    for (const auto& [key, v] : entries) {
      Exp total = 0;
      for (Exp e : key.second) total += e;
      r = std::max<long>(r, static_cast<long>(total) - key.first);
    }
    return r;
  }
  /// Total Betti number at homological index i.
  long total(int i) const {
    long t = 0;
    for (const auto& [key, v] : entries)
      if (key.first == i) t += v;
    return t;
  }
};

/// Closure of the generator degrees under componentwise max.  Includes the
/// generators, excludes 0; sorted.
std::vector<ExpVec> lcm_lattice(const MonomialIdeal& I,
                                const ResourceCaps& caps = default_caps());

/// Multigraded Betti table of R/I via upper-Koszul complexes over the lcm
/// lattice; valid for any proper nonzero monomial ideal.
BettiTable betti_table(const MonomialIdeal& I, const FieldSpec& field,
                       const ResourceCaps& caps = default_caps());

/// Alexander dual of a squarefree proper nonzero ideal: the ideal of its
/// minimal primes' products.
MonomialIdeal alexander_dual(const MonomialIdeal& I);

/// depth/pd/reg plus CM, Gorenstein and (when CM) the a-invariant.
/// Non-squarefree input is routed through full polarization; depth and pd
/// are corrected by |X_J|, regularity carries over unchanged.
struct HomologicalSummary {
  FieldSpec field;
  long depth = 0;
  long pd = 0;
  long reg = 0;
  long krull_dim = 0;
  bool cohen_macaulay = false;
  bool gorenstein = false;
  std::optional<long> a_invariant;
};
HomologicalSummary homological_summary(const MonomialIdeal& I, const FieldSpec& field,
                                       const ResourceCaps& caps = default_caps());

/// Terai's identity reg(R/I) + 1 = pd(R/I^∨), both sides computed
/// independently.  Must hold for every squarefree proper nonzero ideal;
/// false signals an implementation bug.
bool terai_check(const MonomialIdeal& I, const FieldSpec& field,
                 const ResourceCaps& caps = default_caps());

/// Search for a monomial w with w ∉ I and x_j·w ∈ I for every variable,
/// which certifies depth(R/I) = 0.  The search walks full-support lcm
/// lattice points a and tests w = a - (1,…,1); it is complete for the
/// existence question when the lattice fits under the cap.
enum class WitnessStatus { found, none, inconclusive };
struct DepthZeroWitness {
  WitnessStatus status = WitnessStatus::none;
  std::optional<Monomial> witness;
};
DepthZeroWitness depth_zero_witness(const MonomialIdeal& I,
                                    const ResourceCaps& caps = default_caps());

}  // namespace monoideal
