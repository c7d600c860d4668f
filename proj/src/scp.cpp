#include "monoideal/scp.hpp"

#include <algorithm>

namespace monoideal {

namespace {

// Solve an n x n rational system by Gaussian elimination; nullopt when
// singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> m,
                                                  std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(b[piv], b[col]);
    Rational inv = 1 / m[col][col];
    for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
      b[i] -= f * b[col];
    }
  }
  return b;
}

bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

}  // namespace

ScpReport scp_vertices(const IncidenceMatrix& a, const ResourceCaps& caps) {
  const int n = a.nrows;
  const int r = a.ncols;
  const int total = n + r;
  if (n == 0) throw PreconditionError("empty vertex set");

  // number of bases C(n+r, n), capped
  {
    std::size_t c = 1;
    for (int i = 1; i <= n; ++i) {
      c = c * static_cast<std::size_t>(total - n + i) / static_cast<std::size_t>(i);
      if (c > caps.max_scp_bases)
        throw ResourceError("set covering polyhedron basis enumeration", caps.max_scp_bases);
    }
  }

  // constraint rows: 0..n-1 are x_i >= 0, n..n+r-1 are <x, col_j> >= 1
  auto row_coeff = [&](int row, int var) -> Rational {
    if (row < n) return row == var ? 1 : 0;
    return a.at(var, row - n) ? 1 : 0;
  };
  auto row_rhs = [&](int row) -> Rational { return row < n ? 0 : 1; };

  std::vector<std::vector<Rational>> verts;
  std::vector<int> comb(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) comb[static_cast<std::size_t>(i)] = i;
  bool more = total >= n;
  while (more) {
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(n)));
    std::vector<Rational> b(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      for (int v = 0; v < n; ++v) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] =
          row_coeff(comb[static_cast<std::size_t>(i)], v);
      b[static_cast<std::size_t>(i)] = row_rhs(comb[static_cast<std::size_t>(i)]);
    }
    if (auto x = solve_square(std::move(m), std::move(b))) {
      bool feasible = true;
      for (int v = 0; v < n && feasible; ++v)
        if ((*x)[static_cast<std::size_t>(v)] < 0) feasible = false;
      for (int j = 0; j < r && feasible; ++j) {
        Rational dot = 0;
        for (int v = 0; v < n; ++v)
          if (a.at(v, j)) dot += (*x)[static_cast<std::size_t>(v)];
        if (dot < 1) feasible = false;
      }
      if (feasible) verts.push_back(std::move(*x));
    }
    // next combination
    int i = n - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == total - n + i) --i;
    if (i < 0) {
      more = false;
    } else {
      ++comb[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < n; ++j)
        comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
  }

  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

  ScpReport rep;
  rep.vertices = std::move(verts);
  for (const auto& v : rep.vertices) {
    bool ok = true;
    for (const auto& q : v)
      if (!is_integer(q)) {
        ok = false;
        break;
      }
    if (!ok) {
      rep.integral = false;
      rep.fractional_witness = v;
      break;
    }
  }
  return rep;
}

}  // namespace monoideal
