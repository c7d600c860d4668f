#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monoideal/ideal.hpp"

namespace monoideal {

/// Result of fully polarizing an ideal J.  The rule, per variable power
/// x_i^c with γ_i = max x_i-degree over G(J):
///   γ_i = 1      ->  x_i
///   c < γ_i      ->  x_{i,2} ⋯ x_{i,c+1}
///   c = γ_i      ->  x_{i,2} ⋯ x_{i,γ_i} · x_i
/// New variables are named "<var>,<level>" and appended to the context,
/// grouped by original variable, levels ascending.
struct PolarizationResult {
  MonomialIdeal ideal;                         ///< squarefree, extended context
  std::vector<std::string> new_vars;           ///< X_J in context order
  std::vector<std::pair<int, int>> origin;     ///< per new var: (orig index, level ≥ 2)
  std::vector<Monomial> polarized_gens;        ///< aligned with G(J)
  std::vector<std::string> polarized_strings;  ///< rule-order factor strings
  std::vector<Exp> gammas;                     ///< per original variable
};

PolarizationResult polarize_full(const MonomialIdeal& J);

/// Polarize monomials of the host's original ring by the host's rule
/// (same γ's, same new variables).  Every exponent must be ≤ the host γ.
std::vector<Monomial> polarize_in(const PolarizationResult& host,
                                  const std::vector<Monomial>& mons);

/// Data of lowering the top x_i-degree: q is the top degree, B the
/// generators attaining it, A the rest, p the top degree over A (absent
/// when A is empty), and L = ({x^a/x_i : x^a ∈ B} ∪ A).
enum class LoweringClause { a, b, c };

struct LoweringData {
  int var = 0;
  Exp q = 0;
  std::optional<Exp> p;
  std::vector<Monomial> top;         ///< B_i
  std::vector<Monomial> rest;        ///< A_i
  MonomialIdeal lowered;             ///< L
  LoweringClause clause = LoweringClause::b;
  /// Full collapse ({x^a/x_i^{q-1}} ∪ A); present when clause c applies.
  std::optional<MonomialIdeal> collapsed;
};

LoweringData lower_top_degree(const MonomialIdeal& I, int var);

/// Substitute x_var^q -> x_var in every generator.  Requires every
/// generator's x_var-degree to be 0 or q with q ≥ 2 (theorem clause (c));
/// otherwise directs the caller to lower_top_degree.
MonomialIdeal collapse_top_power(const MonomialIdeal& I, int var);

/// φ(x_var) = x_var^d: multiplies the variable's exponent by d in every
/// generator.  Total Betti numbers are preserved; reg is non-decreasing.
MonomialIdeal stretch_variable(const MonomialIdeal& I, int var, Exp d);

const char* clause_name(LoweringClause c);

}  // namespace monoideal
