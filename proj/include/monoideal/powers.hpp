#pragma once

#include <optional>
#include <vector>

#include "monoideal/betti.hpp"
#include "monoideal/clutter.hpp"

namespace monoideal {

/// Bounded max-flow min-cut evidence: I(C)^k versus I(C)^(k) for
/// k = 2..K.  Equality up to K is evidence, never proof (the property
/// quantifies over all k), hence the vocabulary {holds_up_to, fails_at}.
struct MfmcReport {
  long checked_up_to = 0;
  std::optional<long> fails_at;
  std::optional<Monomial> witness;  // a generator of I^(k) missing from I^k
  bool holds_up_to_K() const { return !fails_at.has_value(); }
};
MfmcReport mfmc_bounded(const Clutter& c, long K,
                        const ResourceCaps& caps = default_caps());

/// An edge meeting every minimal vertex cover exactly once (exists when C
/// is unmixed with integral Q(A)).
std::optional<std::uint64_t> find_transversal_edge(const Clutter& c);

/// A minimal vertex cover meeting every edge exactly once (exists when C
/// is uniform with integral Q(A)).
std::optional<std::uint64_t> find_transversal_cover(const Clutter& c);

/// (I^{k+1} : x_e) = I^k for k = 1..K, checked by direct computation.
bool colon_power_identity(const MonomialIdeal& I, const Monomial& edge_monomial, long K,
                          const ResourceCaps& caps = default_caps());

/// depth/reg of R/I^k (ordinary) or R/I^(k) (symbolic) for k = 1..K.
/// Per-k resource errors are recorded as gaps, not failures; monotonicity
/// flags are judged over the computed entries.
enum class PowerMode { ordinary, symbolic };

struct MonotoneReport {
  std::vector<std::optional<long>> depths;  // index k-1
  std::vector<std::optional<long>> regs;
  std::vector<std::string> notes;  // one per resource gap
  bool depth_non_increasing = true;
  bool reg_non_decreasing = true;
};
MonotoneReport monotone_sequences(const MonomialIdeal& I, long K, PowerMode mode,
                                  const FieldSpec& field,
                                  const ResourceCaps& caps = default_caps());

}  // namespace monoideal
