#include "monoideal/session.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace monoideal {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  char take() {
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }
  void skip_ws_and_comments(bool stop_at_newline) {
    while (!eof()) {
      char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') take();
      } else if (c == '\n') {
        if (stop_at_newline) return;
        take();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        take();
      } else {
        return;
      }
    }
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, col, msg); }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string read_ident(Cursor& cur) {
  cur.skip_ws_and_comments(true);
  if (cur.eof() || !ident_start(cur.peek())) cur.fail("expected an identifier");
  std::string out;
  while (!cur.eof() && ident_char(cur.peek())) out += cur.take();
  return out;
}

long read_int(Cursor& cur) {
  cur.skip_ws_and_comments(true);
  if (cur.eof() || !std::isdigit(static_cast<unsigned char>(cur.peek())))
    cur.fail("expected a nonnegative integer");
  long v = 0;
  while (!cur.eof() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    v = v * 10 + (cur.take() - '0');
    if (v > (1L << 40)) cur.fail("integer literal too large");
  }
  return v;
}

void expect(Cursor& cur, char c) {
  cur.skip_ws_and_comments(true);
  if (cur.eof() || cur.peek() != c) cur.fail(std::string("expected '") + c + "'");
  cur.take();
}

bool try_take(Cursor& cur, char c) {
  cur.skip_ws_and_comments(true);
  if (!cur.eof() && cur.peek() == c) {
    cur.take();
    return true;
  }
  return false;
}

int var_index(Cursor& cur, const ContextPtr& ctx, const std::string& name) {
  auto idx = ctx->index_of(name);
  if (!idx) cur.fail("unknown variable: " + name);
  return *idx;
}

Monomial read_monomial(Cursor& cur, const ContextPtr& ctx) {
  cur.skip_ws_and_comments(true);
  ExpVec e(static_cast<std::size_t>(ctx->size()), 0);
  if (!cur.eof() && (cur.peek() == '1' || cur.peek() == '0')) {
    char c = cur.take();
    if (c == '0') cur.fail("a monomial cannot be 0");
    return Monomial(ctx, std::move(e));
  }
  while (true) {
    std::string name = read_ident(cur);
    int idx = var_index(cur, ctx, name);
    Exp exp = 1;
    if (try_take(cur, '^')) exp = read_int(cur);
    e[static_cast<std::size_t>(idx)] = checked_add(e[static_cast<std::size_t>(idx)], exp);
    if (!try_take(cur, '*')) break;
  }
  return Monomial(ctx, std::move(e));
}

void end_of_line(Cursor& cur) {
  cur.skip_ws_and_comments(true);
  if (!cur.eof() && cur.peek() != '\n') cur.fail("unexpected trailing input on line");
}

}  // namespace

const Session::Binding& Session::get(const std::string& name) const {
  auto it = bindings.find(name);
  if (it == bindings.end()) throw PreconditionError("unknown binding: " + name);
  return it->second;
}

const MonomialIdeal& Session::ideal(const std::string& name) const {
  const auto& b = get(name);
  if (const auto* I = std::get_if<MonomialIdeal>(&b)) return *I;
  throw PreconditionError("binding is not an ideal: " + name);
}

MonomialIdeal Session::as_ideal(const std::string& name) const {
  const auto& b = get(name);
  if (const auto* I = std::get_if<MonomialIdeal>(&b)) return *I;
  if (const auto* g = std::get_if<Graph>(&b)) return g->edge_ideal_of();
  if (const auto* c = std::get_if<Clutter>(&b)) return edge_ideal(*c);
  return weighted_digraph_ideal(std::get<WeightedDigraph>(b));
}

Session parse_session(const std::string& text) {
  Cursor cur{text};
  Session s;

  // ring line first
  cur.skip_ws_and_comments(false);
  {
    std::string kw = read_ident(cur);
    if (kw != "ring") cur.fail("the first statement must be a ring declaration");
    std::vector<std::string> names;
    while (true) {
      cur.skip_ws_and_comments(true);
      if (cur.eof() || cur.peek() == '\n') break;
      names.push_back(read_ident(cur));
    }
    if (names.empty()) cur.fail("ring needs at least one variable");
    try {
      s.context = make_context(std::move(names));
    } catch (const PreconditionError& e) {
      cur.fail(e.what());
    }
  }

  while (true) {
    cur.skip_ws_and_comments(false);
    if (cur.eof()) break;
    std::string kw = read_ident(cur);
    if (kw == "ring") cur.fail("exactly one ring line is allowed");
    std::string name = read_ident(cur);
    if (s.bindings.count(name)) cur.fail("duplicate binding: " + name);
    expect(cur, '=');

    if (kw == "ideal") {
      std::vector<Monomial> gens;
      cur.skip_ws_and_comments(true);
      if (!cur.eof() && cur.peek() == '0') {
        cur.take();
        end_of_line(cur);
        s.bindings.emplace(name, MonomialIdeal::zero(s.context));
        continue;
      }
      while (true) {
        gens.push_back(read_monomial(cur, s.context));
        if (!try_take(cur, ',')) break;
      }
      end_of_line(cur);
      s.bindings.emplace(name, MonomialIdeal::from_generators(s.context, std::move(gens)));
    } else if (kw == "graph") {
      std::vector<std::pair<int, int>> edges;
      while (true) {
        expect(cur, '{');
        int a = var_index(cur, s.context, read_ident(cur));
        int b = var_index(cur, s.context, read_ident(cur));
        expect(cur, '}');
        if (a == b) cur.fail("graph edges need two distinct vertices");
        edges.emplace_back(a, b);
        if (!try_take(cur, ',')) break;
      }
      end_of_line(cur);
      s.bindings.emplace(name, Graph::make(s.context, std::move(edges)));
    } else if (kw == "clutter") {
      std::vector<std::uint64_t> edges;
      while (true) {
        expect(cur, '{');
        std::uint64_t e = 0;
        while (true) {
          cur.skip_ws_and_comments(true);
          if (!cur.eof() && cur.peek() == '}') break;
          e |= std::uint64_t{1} << var_index(cur, s.context, read_ident(cur));
        }
        expect(cur, '}');
        if (e == 0) cur.fail("clutter edges must be nonempty");
        edges.push_back(e);
        if (!try_take(cur, ',')) break;
      }
      end_of_line(cur);
      try {
        s.bindings.emplace(name, Clutter::make(s.context, std::move(edges)));
      } catch (const PreconditionError& e) {
        cur.fail(e.what());
      }
    } else if (kw == "digraph") {
      std::vector<std::pair<int, int>> arcs;
      std::vector<Exp> weights(static_cast<std::size_t>(s.context->size()), 0);
      while (true) {
        expect(cur, '(');
        int tail = var_index(cur, s.context, read_ident(cur));
        expect(cur, '-');
        expect(cur, '>');
        int head = var_index(cur, s.context, read_ident(cur));
        expect(cur, ':');
        long w = read_int(cur);
        expect(cur, ')');
        if (w < 1) cur.fail("vertex weights must be >= 1");
        if (tail == head) cur.fail("loops are not allowed");
        auto& slot = weights[static_cast<std::size_t>(head)];
        if (slot != 0 && slot != w) cur.fail("conflicting weights for one vertex");
        slot = w;
        arcs.emplace_back(tail, head);
        if (!try_take(cur, ',')) break;
      }
      end_of_line(cur);
      for (auto& w : weights)
        if (w == 0) w = 1;
      try {
        s.bindings.emplace(name,
                           WeightedDigraph::make(s.context, std::move(arcs), std::move(weights)));
      } catch (const PreconditionError& e) {
        cur.fail(e.what());
      }
    } else {
      cur.fail("unknown statement: " + kw);
    }
  }
  return s;
}

Monomial parse_monomial(const ContextPtr& ctx, const std::string& text) {
  Cursor cur{text};
  Monomial m = read_monomial(cur, ctx);
  cur.skip_ws_and_comments(true);
  if (!cur.eof()) cur.fail("unexpected trailing input after monomial");
  return m;
}

std::string print_session(const Session& s) {
  std::ostringstream out;
  out << "ring";
  for (const auto& n : s.context->names()) out << ' ' << n;
  out << '\n';
  for (const auto& [name, binding] : s.bindings) {
    if (const auto* I = std::get_if<MonomialIdeal>(&binding)) {
      out << "ideal " << name << " = ";
      if (I->is_zero()) {
        out << "0";
      } else {
        bool first = true;
        for (const auto& g : I->gens()) {
          if (!first) out << ", ";
          out << g.str();
          first = false;
        }
      }
      out << '\n';
    } else if (const auto* g = std::get_if<Graph>(&binding)) {
      out << "graph " << name << " = ";
      bool first = true;
      for (auto [a, b] : g->edges()) {
        if (!first) out << ", ";
        out << '{' << s.context->name(a) << ' ' << s.context->name(b) << '}';
        first = false;
      }
      out << '\n';
    } else if (const auto* c = std::get_if<Clutter>(&binding)) {
      out << "clutter " << name << " = ";
      bool first = true;
      for (auto e : c->edges()) {
        if (!first) out << ", ";
        out << '{';
        bool fv = true;
        for (int v = 0; v < s.context->size(); ++v)
          if (e >> v & 1) {
            if (!fv) out << ' ';
            out << s.context->name(v);
            fv = false;
          }
        out << '}';
        first = false;
      }
      out << '\n';
    } else {
      const auto& d = std::get<WeightedDigraph>(binding);
      out << "digraph " << name << " = ";
      bool first = true;
      for (auto [a, b] : d.arcs) {
        if (!first) out << ", ";
        out << '(' << s.context->name(a) << " -> " << s.context->name(b) << " : "
            << d.weights[static_cast<std::size_t>(b)] << ')';
        first = false;
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace monoideal
