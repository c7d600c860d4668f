#include "monoideal/linalg.hpp"

#include <algorithm>
#include <boost/multiprecision/gmp.hpp>
#include <numeric>

namespace monoideal {

namespace {

using Rational = boost::multiprecision::mpq_rational;

// Sparse row over a field element type, kept sorted by column.
template <typename Elem>
using Row = std::vector<std::pair<int, Elem>>;

// dst += c * src, both sorted by column; zero results are dropped.
template <typename Elem, typename AddMul>
Row<Elem> axpy(const Row<Elem>& dst, const Row<Elem>& src, const Elem& c, AddMul addmul) {
  Row<Elem> out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      Elem v = addmul(Elem{}, src[j].second, c);
      if (v != Elem{}) out.emplace_back(src[j].first, v);
      ++j;
    } else {
      Elem v = addmul(dst[i].second, src[j].second, c);
      if (v != Elem{}) out.emplace_back(dst[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

// Generic sparse elimination.  Rows are consumed shortest-first; within a
// pivot row the column with the fewest live occurrences is chosen, which
// keeps fill-in low on boundary matrices.
template <typename Elem, typename Ops>
long rank_impl(std::vector<Row<Elem>> rows, int ncols, Ops ops) {
  std::vector<int> colcount(ncols, 0);
  for (const auto& r : rows)
    for (const auto& [c, v] : r) ++colcount[c];

  std::vector<std::pair<Row<Elem>, Elem>> pivots;  // (normalized row, unused)
  std::vector<int> pivot_col;
  long rk = 0;

  // Process rows in rounds; each round picks the sparsest remaining row.
  std::vector<bool> done(rows.size(), false);
  for (std::size_t processed = 0; processed < rows.size(); ++processed) {
    // pick sparsest unprocessed nonzero row
    std::size_t best = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (done[i] || rows[i].empty()) continue;
      if (best == rows.size() || rows[i].size() < rows[best].size()) best = i;
    }
    if (best == rows.size()) break;
    done[best] = true;
    Row<Elem> r = std::move(rows[best]);
    rows[best].clear();

    // reduce against existing pivots
    for (std::size_t p = 0; p < pivots.size(); ++p) {
      int pc = pivot_col[p];
      auto it = std::lower_bound(r.begin(), r.end(), pc,
                                 [](const auto& a, int col) { return a.first < col; });
      if (it == r.end() || it->first != pc) continue;
      Elem coeff = ops.negate(it->second);
      r = axpy<Elem>(r, pivots[p].first, coeff, [&](const Elem& a, const Elem& b, const Elem& c) {
        return ops.addmul(a, b, c);
      });
    }
    if (r.empty()) continue;

    // choose pivot column: fewest occurrences among this row's columns
    int pc = r[0].first;
    int bestcount = colcount[pc];
    for (const auto& [c, v] : r)
      if (colcount[c] < bestcount) {
        bestcount = colcount[c];
        pc = c;
      }
    // normalize so the pivot entry is 1
    auto it = std::lower_bound(r.begin(), r.end(), pc,
                               [](const auto& a, int col) { return a.first < col; });
    Elem inv = ops.invert(it->second);
    for (auto& [c, v] : r) v = ops.mul(v, inv);

    pivots.emplace_back(std::move(r), Elem{});
    pivot_col.push_back(pc);
    ++rk;

    // eliminate the pivot column from all remaining rows
    const Row<Elem>& prow = pivots.back().first;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (done[i] || rows[i].empty()) continue;
      auto jt = std::lower_bound(rows[i].begin(), rows[i].end(), pc,
                                 [](const auto& a, int col) { return a.first < col; });
      if (jt == rows[i].end() || jt->first != pc) continue;
      Elem coeff = ops.negate(jt->second);
      rows[i] = axpy<Elem>(rows[i], prow, coeff,
                           [&](const Elem& a, const Elem& b, const Elem& c) {
                             return ops.addmul(a, b, c);
                           });
    }
  }
  return rk;
}

struct RationalOps {
  Rational addmul(const Rational& a, const Rational& b, const Rational& c) const {
    return a + b * c;
  }
  Rational negate(const Rational& a) const { return -a; }
  Rational mul(const Rational& a, const Rational& b) const { return a * b; }
  Rational invert(const Rational& a) const { return 1 / a; }
};

struct PrimeOps {
  std::uint64_t p;
  std::uint64_t addmul(std::uint64_t a, std::uint64_t b, std::uint64_t c) const {
    return (a + b * c) % p;
  }
  std::uint64_t negate(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
  std::uint64_t invert(std::uint64_t a) const {
    // Fermat; p is prime and a != 0 mod p.
    std::uint64_t r = 1, base = a % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  }
};

}  // namespace

long rank(const SparseIntMatrix& m, const FieldSpec& field) {
  if (field.characteristic == 0) {
    std::vector<Row<Rational>> rows(m.rows.size());
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
      rows[i].reserve(m.rows[i].size());
      for (const auto& [c, v] : m.rows[i])
        if (v != 0) rows[i].emplace_back(c, Rational(v));
    }
    return rank_impl<Rational>(std::move(rows), m.ncols, RationalOps{});
  }
  std::uint64_t p = field.characteristic;
  std::vector<Row<std::uint64_t>> rows(m.rows.size());
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    rows[i].reserve(m.rows[i].size());
    for (const auto& [c, v] : m.rows[i]) {
      std::int64_t vv = v % static_cast<std::int64_t>(p);
      if (vv < 0) vv += static_cast<std::int64_t>(p);
      if (vv != 0) rows[i].emplace_back(c, static_cast<std::uint64_t>(vv));
    }
  }
  return rank_impl<std::uint64_t>(std::move(rows), m.ncols, PrimeOps{p});
}

}  // namespace monoideal
