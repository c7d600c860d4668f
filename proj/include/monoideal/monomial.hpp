#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "monoideal/context.hpp"
#include "monoideal/errors.hpp"

namespace monoideal {

using ExpVec = std::vector<Exp>;

/// A monomial x^a over a fixed context: an exponent vector of length n,
/// all entries >= 0.
class Monomial {
 public:
  Monomial(ContextPtr ctx, ExpVec exps) : ctx_(std::move(ctx)), exps_(std::move(exps)) {
    if (static_cast<int>(exps_.size()) != ctx_->size())
      throw PreconditionError("exponent vector length does not match context");
    for (Exp e : exps_)
      if (e < 0) throw PreconditionError("negative exponent");
  }

  static Monomial one(ContextPtr ctx) {
    ExpVec e(static_cast<std::size_t>(ctx->size()), 0);
    return Monomial(std::move(ctx), std::move(e));
  }

  const ContextPtr& context() const { return ctx_; }
  const ExpVec& exps() const { return exps_; }
  Exp deg_in(int i) const { return exps_[i]; }
  int nvars() const { return static_cast<int>(exps_.size()); }

  Exp degree() const {
    Exp d = 0;
    for (Exp e : exps_) d = checked_add(d, e);
    return d;
  }

  bool is_one() const {
    for (Exp e : exps_)
      if (e != 0) return false;
    return true;
  }

  bool is_squarefree() const {
    for (Exp e : exps_)
      if (e > 1) return false;
    return true;
  }

  bool divides(const Monomial& m) const {
    require_same_context(ctx_, m.ctx_);
    for (int i = 0; i < nvars(); ++i)
      if (exps_[i] > m.exps_[i]) return false;
    return true;
  }

  std::vector<int> support() const {
    std::vector<int> s;
    for (int i = 0; i < nvars(); ++i)
      if (exps_[i] > 0) s.push_back(i);
    return s;
  }

  /// Support as a bitmask.  Only valid in contexts with at most 64
  /// variables; larger contexts must stay on the vector paths.
  std::uint64_t support_mask() const {
    if (nvars() > 64) throw ResourceError("support_mask requires <= 64 variables", 64);
    std::uint64_t m = 0;
    for (int i = 0; i < nvars(); ++i)
      if (exps_[i] > 0) m |= std::uint64_t{1} << i;
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    require_same_context(a.ctx_, b.ctx_);
    ExpVec e(a.exps_);
    for (int i = 0; i < a.nvars(); ++i) e[i] = checked_add(e[i], b.exps_[i]);
    return Monomial(a.ctx_, std::move(e));
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_context(a.ctx_, b.ctx_);
    ExpVec e(a.exps_);
    for (int i = 0; i < a.nvars(); ++i) e[i] = std::max(e[i], b.exps_[i]);
    return Monomial(a.ctx_, std::move(e));
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    require_same_context(a.ctx_, b.ctx_);
    ExpVec e(a.exps_);
    for (int i = 0; i < a.nvars(); ++i) e[i] = std::min(e[i], b.exps_[i]);
    return Monomial(a.ctx_, std::move(e));
  }

  /// g / gcd(g, f): the generator image under the colon by f.
  Monomial colon_by(const Monomial& f) const {
    require_same_context(ctx_, f.ctx_);
    ExpVec e(exps_);
    for (int i = 0; i < nvars(); ++i) e[i] = std::max<Exp>(e[i] - f.exps_[i], 0);
    return Monomial(ctx_, std::move(e));
  }

  bool operator==(const Monomial& m) const {
    return *ctx_ == *m.ctx_ && exps_ == m.exps_;
  }

  /// Graded lexicographic: by total degree, ties broken lexicographically
  /// on the exponent vector.  This is the canonical generator order.
  static int compare(const Monomial& a, const Monomial& b) {
    Exp da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    if (a.exps_ < b.exps_) return -1;
    if (b.exps_ < a.exps_) return 1;
    return 0;
  }

  bool operator<(const Monomial& m) const { return compare(*this, m) < 0; }

  /// "x1^2*x3", factors in context order; "1" for the empty product.
  std::string str() const {
    std::string out;
    for (int i = 0; i < nvars(); ++i) {
      if (exps_[i] == 0) continue;
      if (!out.empty()) out += '*';
      out += ctx_->name(i);
      if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
  }

 private:
  ContextPtr ctx_;
  ExpVec exps_;
};

}  // namespace monoideal
