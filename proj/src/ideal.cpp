#include "monoideal/ideal.hpp"

#include <algorithm>
#include <bit>

namespace monoideal {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  for (std::size_t i = 1; i < gens.size(); ++i)
    require_same_context(gens[0].context(), gens[i].context());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // Sorted by degree, so a divisor always precedes its multiples.
  std::vector<Monomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    bool dominated = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(g);
  }
  return out;
}

MonomialIdeal MonomialIdeal::from_generators(ContextPtr ctx, std::vector<Monomial> gens) {
  for (const auto& g : gens) require_same_context(ctx, g.context());
  return MonomialIdeal(std::move(ctx), minimalize(std::move(gens)));
}

bool MonomialIdeal::is_squarefree() const {
  for (const auto& g : gens_)
    if (!g.is_squarefree()) return false;
  return true;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  require_same_context(ctx_, m.context());
  for (const auto& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& f) {
  require_same_context(I.context(), f.context());
  std::vector<Monomial> out;
  out.reserve(I.gens().size());
  for (const auto& g : I.gens()) out.push_back(g.colon_by(f));
  return MonomialIdeal::from_generators(I.context(), std::move(out));
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_context(I.context(), J.context());
  std::vector<Monomial> out(I.gens());
  out.insert(out.end(), J.gens().begin(), J.gens().end());
  return MonomialIdeal::from_generators(I.context(), std::move(out));
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J,
                      const ResourceCaps& caps) {
  require_same_context(I.context(), J.context());
  if (I.is_zero() || J.is_zero()) return MonomialIdeal::zero(I.context());
  std::size_t raw = I.gens().size() * J.gens().size();
  if (raw > caps.max_intermediate_monomials)
    throw ResourceError("intermediate generating set (product)",
                        caps.max_intermediate_monomials);
  std::vector<Monomial> out;
  out.reserve(raw);
  for (const auto& f : I.gens())
    for (const auto& g : J.gens()) out.push_back(f * g);
  return MonomialIdeal::from_generators(I.context(), std::move(out));
}

MonomialIdeal power(const MonomialIdeal& I, long k, const ResourceCaps& caps) {
  if (k < 1) throw PreconditionError("power requires k >= 1");
  MonomialIdeal R = I;
  for (long i = 1; i < k; ++i) R = product(R, I, caps);
  return R;
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J,
                        const ResourceCaps& caps) {
  require_same_context(I.context(), J.context());
  if (I.is_zero() || J.is_zero()) return MonomialIdeal::zero(I.context());
  std::size_t raw = I.gens().size() * J.gens().size();
  if (raw > caps.max_intermediate_monomials)
    throw ResourceError("intermediate generating set (intersection)",
                        caps.max_intermediate_monomials);
  std::vector<Monomial> out;
  out.reserve(raw);
  for (const auto& f : I.gens())
    for (const auto& g : J.gens()) out.push_back(lcm(f, g));
  return MonomialIdeal::from_generators(I.context(), std::move(out));
}

MonomialIdeal radical(const MonomialIdeal& I) {
  std::vector<Monomial> out;
  out.reserve(I.gens().size());
  for (const auto& g : I.gens()) {
    ExpVec e(g.exps());
    for (auto& x : e) x = x > 0 ? 1 : 0;
    out.emplace_back(I.context(), std::move(e));
  }
  return MonomialIdeal::from_generators(I.context(), std::move(out));
}

std::vector<std::uint64_t> minimal_transversals(const std::vector<std::uint64_t>& edges,
                                                int n) {
  if (n > 64) throw ResourceError("transversal enumeration requires <= 64 vertices", 64);
  for (auto e : edges)
    if (e == 0) throw PreconditionError("empty hyperedge");
  std::vector<std::uint64_t> covers{0};
  for (auto e : edges) {
    std::vector<std::uint64_t> next;
    next.reserve(covers.size() * 2);
    for (auto c : covers) {
      if (c & e) {
        next.push_back(c);
      } else {
        for (int v = 0; v < n; ++v)
          if (e >> v & 1) next.push_back(c | (std::uint64_t{1} << v));
      }
    }
    std::sort(next.begin(), next.end(), [](std::uint64_t a, std::uint64_t b) {
      int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    covers.clear();
    for (auto c : next) {
      bool dominated = false;
      for (auto d : covers)
        if ((d & c) == d) {
          dominated = true;
          break;
        }
      if (!dominated) covers.push_back(c);
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

std::vector<PrimeSet> minimal_primes(const MonomialIdeal& I) {
  if (!I.is_squarefree())
    throw PreconditionError("minimal_primes requires a squarefree ideal (take radical first)");
  if (I.is_zero() || !I.is_proper())
    throw PreconditionError("minimal_primes requires a proper nonzero ideal");
  int n = I.nvars();
  std::vector<std::uint64_t> supports;
  supports.reserve(I.gens().size());
  for (const auto& g : I.gens()) supports.push_back(g.support_mask());
  auto covers = minimal_transversals(supports, n);
  std::vector<PrimeSet> out;
  out.reserve(covers.size());
  for (auto c : covers) {
    std::vector<int> vars;
    for (int v = 0; v < n; ++v)
      if (c >> v & 1) vars.push_back(v);
    out.push_back(PrimeSet{I.context(), std::move(vars)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal prime_power(const PrimeSet& p, long k, const ResourceCaps& caps) {
  if (k < 1) throw PreconditionError("prime_power requires k >= 1");
  if (p.vars.empty()) throw PreconditionError("empty prime set");
  // All degree-k monomials in the prime's variables: C(s+k-1, k) of them.
  std::vector<Monomial> out;
  ExpVec e(static_cast<std::size_t>(p.ctx->size()), 0);
  auto rec = [&](auto&& self, std::size_t idx, long remaining) -> void {
    if (idx + 1 == p.vars.size()) {
      e[p.vars[idx]] = remaining;
      out.emplace_back(p.ctx, e);
      if (out.size() > caps.max_intermediate_monomials)
        throw ResourceError("intermediate generating set (prime power)",
                            caps.max_intermediate_monomials);
      e[p.vars[idx]] = 0;
      return;
    }
    for (long c = remaining; c >= 0; --c) {
      e[p.vars[idx]] = c;
      self(self, idx + 1, remaining - c);
    }
    e[p.vars[idx]] = 0;
  };
  rec(rec, 0, k);
  return MonomialIdeal::from_generators(p.ctx, std::move(out));
}

MonomialIdeal symbolic_power(const MonomialIdeal& I, long k, const ResourceCaps& caps) {
  if (k < 1) throw PreconditionError("symbolic_power requires k >= 1");
  auto primes = minimal_primes(I);
  MonomialIdeal result = prime_power(primes[0], k, caps);
  for (std::size_t i = 1; i < primes.size(); ++i)
    result = intersect(result, prime_power(primes[i], k, caps), caps);
  return result;
}

long height(const MonomialIdeal& I) {
  auto primes = minimal_primes(I);
  std::size_t h = primes[0].vars.size();
  for (const auto& p : primes) h = std::min(h, p.vars.size());
  return static_cast<long>(h);
}

bool is_unmixed_ideal(const MonomialIdeal& I) {
  auto primes = minimal_primes(I);
  for (const auto& p : primes)
    if (p.vars.size() != primes[0].vars.size()) return false;
  return true;
}

}  // namespace monoideal
