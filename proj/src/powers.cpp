#include "monoideal/powers.hpp"

#include <bit>

namespace monoideal {

MfmcReport mfmc_bounded(const Clutter& c, long K, const ResourceCaps& caps) {
  if (K < 2) throw PreconditionError("mfmc_bounded requires K >= 2");
  MonomialIdeal I = edge_ideal(c);
  if (!I.is_proper() || I.is_zero())
    throw PreconditionError("mfmc_bounded requires a proper nonzero edge ideal");
  MfmcReport rep;
  rep.checked_up_to = K;
  MonomialIdeal ordinary = I;
  for (long k = 2; k <= K; ++k) {
    ordinary = product(ordinary, I, caps);
    MonomialIdeal symbolic = symbolic_power(I, k, caps);
    if (!(ordinary == symbolic)) {
      rep.fails_at = k;
      // symbolic always contains ordinary; the first missing generator is
      // the deterministic witness
      for (const auto& g : symbolic.gens())
        if (!ordinary.contains(g)) {
          rep.witness = g;
          break;
        }
      return rep;
    }
  }
  return rep;
}

std::optional<std::uint64_t> find_transversal_edge(const Clutter& c) {
  const auto& covers = c.min_covers();
  for (auto e : c.edges()) {
    bool ok = true;
    for (auto cv : covers)
      if (std::popcount(e & cv) != 1) {
        ok = false;
        break;
      }
    if (ok) return e;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> find_transversal_cover(const Clutter& c) {
  for (auto cv : c.min_covers()) {
    bool ok = true;
    for (auto e : c.edges())
      if (std::popcount(e & cv) != 1) {
        ok = false;
        break;
      }
    if (ok) return cv;
  }
  return std::nullopt;
}

bool colon_power_identity(const MonomialIdeal& I, const Monomial& edge_monomial, long K,
                          const ResourceCaps& caps) {
  if (K < 1) throw PreconditionError("colon_power_identity requires K >= 1");
  MonomialIdeal pk = I;
  for (long k = 1; k <= K; ++k) {
    MonomialIdeal pk1 = product(pk, I, caps);
    if (!(colon(pk1, edge_monomial) == pk)) return false;
    pk = std::move(pk1);
  }
  return true;
}

MonotoneReport monotone_sequences(const MonomialIdeal& I, long K, PowerMode mode,
                                  const FieldSpec& field, const ResourceCaps& caps) {
  if (K < 2) throw PreconditionError("monotone_sequences requires K >= 2");
  MonotoneReport rep;
  rep.depths.resize(static_cast<std::size_t>(K));
  rep.regs.resize(static_cast<std::size_t>(K));
  std::optional<MonomialIdeal> ordinary;
  for (long k = 1; k <= K; ++k) {
    try {
      MonomialIdeal Jk = [&] {
        if (mode == PowerMode::symbolic) return symbolic_power(I, k, caps);
        if (!ordinary)
          ordinary = I;
        else
          ordinary = product(*ordinary, I, caps);
        return *ordinary;
      }();
      auto s = homological_summary(Jk, field, caps);
      rep.depths[static_cast<std::size_t>(k - 1)] = s.depth;
      rep.regs[static_cast<std::size_t>(k - 1)] = s.reg;
    } catch (const ResourceError& e) {
      rep.notes.push_back("k=" + std::to_string(k) + ": " + e.what());
    }
  }
  for (std::size_t i = 0; i + 1 < rep.depths.size(); ++i) {
    if (rep.depths[i] && rep.depths[i + 1] && *rep.depths[i] < *rep.depths[i + 1])
      rep.depth_non_increasing = false;
    if (rep.regs[i] && rep.regs[i + 1] && *rep.regs[i] > *rep.regs[i + 1])
      rep.reg_non_decreasing = false;
  }
  return rep;
}

}  // namespace monoideal
