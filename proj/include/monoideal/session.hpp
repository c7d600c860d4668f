#pragma once

#include <map>
#include <string>
#include <variant>

#include "monoideal/clutter.hpp"
#include "monoideal/digraph.hpp"
#include "monoideal/graph.hpp"
#include "monoideal/ideal.hpp"

namespace monoideal {

/// A parsed input file: one ring plus named bindings, all sharing the
/// ring's context.
///
/// Grammar (line-oriented, '#' starts a comment):
///   ring <name>+
///   ideal   <N> = <monomial> (, <monomial>)*      monomial = var(^int)? joined by '*',
///                                                 or the literals 0 / 1
///   graph   <N> = {<var> <var>} (, {<var> <var>})*
///   clutter <N> = {<var>+} (, {<var>+})*
///   digraph <N> = (<var> -> <var> : <int>) (, ...)*   weight attaches to the head
/// The ring line must come first and appear exactly once.
struct Session {
  using Binding = std::variant<MonomialIdeal, Graph, Clutter, WeightedDigraph>;
  ContextPtr context;
  std::map<std::string, Binding> bindings;

  const Binding& get(const std::string& name) const;
  const MonomialIdeal& ideal(const std::string& name) const;

  /// The bound object's edge/cover structure as an ideal, when it has one:
  /// ideals pass through, graphs/clutters yield their edge ideal, digraphs
  /// their weighted edge ideal.
  MonomialIdeal as_ideal(const std::string& name) const;
};

Session parse_session(const std::string& text);

/// Inverse of parse_session up to formatting; parse(print(s)) == s.
std::string print_session(const Session& s);

/// Parse a single monomial literal ("x1^2*x3", "1") in a context.
Monomial parse_monomial(const ContextPtr& ctx, const std::string& text);

}  // namespace monoideal
