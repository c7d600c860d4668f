#pragma once

#include <vector>

#include "monoideal/caps.hpp"
#include "monoideal/monomial.hpp"

namespace monoideal {

/// A monomial prime ideal: the ideal generated by a nonempty subset of the
/// variables.
struct PrimeSet {
  ContextPtr ctx;
  std::vector<int> vars;  // sorted, nonempty

  bool operator==(const PrimeSet& o) const {
    return *ctx == *o.ctx && vars == o.vars;
  }
  bool operator<(const PrimeSet& o) const {
    if (vars.size() != o.vars.size()) return vars.size() < o.vars.size();
    return vars < o.vars;
  }
};

/// A monomial ideal in canonical form: the unique minimal generating set
/// G(I), an antichain under divisibility, sorted graded-lex.  Equality is
/// structural.  The zero ideal has no generators; the unit ideal is
/// generated by 1.
class MonomialIdeal {
 public:
  /// Canonicalize an arbitrary generator list (dedup, drop divisible
  /// generators, sort).
  static MonomialIdeal from_generators(ContextPtr ctx, std::vector<Monomial> gens);

  static MonomialIdeal zero(ContextPtr ctx) { return MonomialIdeal(std::move(ctx), {}); }
  static MonomialIdeal unit(ContextPtr ctx) {
    auto one = Monomial::one(ctx);
    return MonomialIdeal(std::move(ctx), {one});
  }

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  int nvars() const { return ctx_->size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_proper() const { return !is_unit(); }
  bool is_squarefree() const;

  bool contains(const Monomial& m) const;

  bool operator==(const MonomialIdeal& o) const {
    return *ctx_ == *o.ctx_ && gens_ == o.gens_;
  }

  std::vector<std::string> gen_strings() const {
    std::vector<std::string> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) out.push_back(g.str());
    return out;
  }

 private:
  MonomialIdeal(ContextPtr ctx, std::vector<Monomial> gens)
      : ctx_(std::move(ctx)), gens_(std::move(gens)) {}
  ContextPtr ctx_;
  std::vector<Monomial> gens_;  // canonical
};

/// Antichain of divisibility-minimal monomials, deduplicated and sorted.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& f);
MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J,
                      const ResourceCaps& caps = default_caps());
MonomialIdeal power(const MonomialIdeal& I, long k,
                    const ResourceCaps& caps = default_caps());
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J,
                        const ResourceCaps& caps = default_caps());
MonomialIdeal radical(const MonomialIdeal& I);

/// Minimal primes of a squarefree proper nonzero ideal: the minimal
/// transversals of the hypergraph of generator supports.
std::vector<PrimeSet> minimal_primes(const MonomialIdeal& I);

/// All monomials of total degree k in the prime's variables, i.e. G(p^k).
MonomialIdeal prime_power(const PrimeSet& p, long k,
                          const ResourceCaps& caps = default_caps());

/// Intersection of k-th powers of the minimal primes.
MonomialIdeal symbolic_power(const MonomialIdeal& I, long k,
                             const ResourceCaps& caps = default_caps());

long height(const MonomialIdeal& I);
bool is_unmixed_ideal(const MonomialIdeal& I);

/// Minimal transversals of a hypergraph given as bitmasks on n <= 64
/// vertices (Berge-style incremental product with antichain pruning).
/// Empty edges are rejected; the result is sorted.
std::vector<std::uint64_t> minimal_transversals(const std::vector<std::uint64_t>& edges,
                                                int n);

}  // namespace monoideal
