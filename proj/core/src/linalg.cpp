#include "nilgeo/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nilgeo/errors.hpp"
#include "nilgeo/poly_text.hpp"

namespace nilgeo {
namespace {

// Gauss-Jordan by cross-multiplication: eliminating column c of `row` with
// `pivot` never divides, it rescales by the provably nonzero pivot entry.
void eliminate(AlgebraVector& row, const AlgebraVector& pivot, int col) {
  if (row.coords[col].is_zero()) return;
  const Polynomial factor = row.coords[col];
  const Polynomial scale = pivot.coords[col];
  for (int k = 0; k < row.dim(); ++k) {
    row.coords[k] = scale * row.coords[k] - factor * pivot.coords[k];
  }
}

struct Reduced {
  std::vector<int> pivot_cols;       // sorted
  std::vector<AlgebraVector> rows;   // one per pivot, zero at other pivot cols
};

// Stalled rows may still combine, with rational coefficients, into a single
// provably nonzero monomial sitting in one column: that combination is in
// the row space and is a legitimate pivot. Searches the Q-span of the
// stalled rows, coordinatized by (column, monomial) pairs, for such units.
using QKey = std::pair<int, Monomial>;
struct QKeyLess {
  bool operator()(const QKey& a, const QKey& b) const {
    if (a.first != b.first) return a.first < b.first;
    return GradedLexLess{}(a.second, b.second);
  }
};
using QRow = std::map<QKey, Rational, QKeyLess>;

QRow qreduce(QRow row, const std::vector<QRow>& basis) {
  bool changed = true;
  while (changed && !row.empty()) {
    changed = false;
    const QKey lead = row.rbegin()->first;
    for (const auto& b : basis) {
      if (QKeyLess{}(b.rbegin()->first, lead) || QKeyLess{}(lead, b.rbegin()->first)) {
        continue;
      }
      const Rational factor = row.rbegin()->second / b.rbegin()->second;
      for (const auto& [key, value] : b) {
        auto it = row.find(key);
        const Rational next = (it == row.end() ? Rational(0) : it->second) - factor * value;
        if (next == 0) {
          if (it != row.end()) row.erase(it);
        } else if (it == row.end()) {
          row.emplace(key, next);
        } else {
          it->second = next;
        }
      }
      changed = true;
      break;
    }
  }
  return row;
}

// Divides out the common monomial factor in the positive-declared symbols.
// Sound: any polynomial multiple of a row stays in the pointwise span, and
// the stripped factor never vanishes on the assumed domain.
AlgebraVector strip_positive_content(const AlgebraVector& row, const ContextPtr& ctx) {
  std::map<int, int> common;
  bool first = true;
  for (const auto& coord : row.coords) {
    for (const auto& [m, coeff] : coord.terms()) {
      std::map<int, int> exps;
      for (const auto& [sym, exp] : m.factors) {
        if (ctx->is_positive(sym)) exps[sym] = exp;
      }
      if (first) {
        common = std::move(exps);
        first = false;
      } else {
        for (auto it = common.begin(); it != common.end();) {
          auto found = exps.find(it->first);
          if (found == exps.end()) {
            it = common.erase(it);
          } else {
            it->second = std::min(it->second, found->second);
            ++it;
          }
        }
      }
    }
  }
  if (common.empty()) return row;
  AlgebraVector out = AlgebraVector::zero(ctx, row.dim());
  for (int c = 0; c < row.dim(); ++c) {
    for (const auto& [m, coeff] : row.coords[c].terms()) {
      Monomial reduced;
      for (const auto& [sym, exp] : m.factors) {
        const auto it = common.find(sym);
        const int left = exp - (it == common.end() ? 0 : it->second);
        if (left > 0) reduced.factors.emplace_back(sym, left);
      }
      out.coords[c].add_term(reduced, coeff);
    }
  }
  return out;
}

std::vector<AlgebraVector> rescue_pivots(const std::vector<AlgebraVector>& raw_pending,
                                         const ContextPtr& ctx, int ambient) {
  std::vector<AlgebraVector> pending;
  for (const auto& row : raw_pending) pending.push_back(strip_positive_content(row, ctx));
  std::vector<QRow> basis;
  std::set<QKey, QKeyLess> candidates;
#ifdef NILGEO_DEBUG_RESCUE
  for (const auto& row : pending) {
    fprintf(stderr, "pending:");
    for (int c = 0; c < ambient; ++c) {
      if (!row.coords[c].is_zero())
        fprintf(stderr, " [%d] %s", c, poly_to_text(row.coords[c]).c_str());
    }
    fprintf(stderr, "\n");
  }
#endif
  for (const auto& row : pending) {
    QRow qrow;
    for (int c = 0; c < ambient; ++c) {
      for (const auto& [m, coeff] : row.coords[c].terms()) {
        qrow[{c, m}] = coeff;
        bool positive = true;
        for (const auto& [sym, exp] : m.factors) positive = positive && ctx->is_positive(sym);
        if (positive) candidates.insert({c, m});
      }
    }
    qrow = qreduce(std::move(qrow), basis);
    if (!qrow.empty()) basis.push_back(std::move(qrow));
  }
  std::vector<AlgebraVector> out;
  for (const auto& key : candidates) {
    QRow unit{{key, Rational(1)}};
    if (!qreduce(unit, basis).empty()) continue;
    AlgebraVector v = AlgebraVector::zero(ctx, ambient);
    v.coords[key.first].add_term(key.second, Rational(1));
    out.push_back(std::move(v));
  }
  return out;
}

Reduced reduce_rows(const std::vector<AlgebraVector>& input, int ambient) {
  Reduced out;
  std::vector<std::pair<int, AlgebraVector>> pivots;  // (col, row)
  std::vector<AlgebraVector> pending;
  for (const AlgebraVector& row : input) {
    if (!row.coords.empty() && row.dim() != ambient) {
      throw UsageError("row dimension mismatch");
    }
    if (!row.is_zero()) pending.push_back(row);
  }
  // Rows without a usable pivot are retried: a pivot found later elsewhere
  // can eliminate the undecidable entry entirely. When that stalls, rational
  // combinations of the stalled rows are searched for fresh monomial pivots.
  bool rescued = true;
  while (rescued && !pending.empty()) {
    bool progress = true;
    while (progress && !pending.empty()) {
      progress = false;
      std::vector<AlgebraVector> still_pending;
      for (AlgebraVector& row : pending) {
        for (const auto& [col, pivot] : pivots) eliminate(row, pivot, col);
        if (row.is_zero()) {
          progress = true;
          continue;
        }
        int pivot_col = -1;
        for (int c = 0; c < ambient; ++c) {
          if (provably_nonzero(row.coords[c])) {
            pivot_col = c;
            break;
          }
        }
        if (pivot_col < 0) {
          still_pending.push_back(std::move(row));
          continue;
        }
        for (auto& [col, pivot] : pivots) eliminate(pivot, row, pivot_col);
        pivots.emplace_back(pivot_col, std::move(row));
        progress = true;
      }
      pending = std::move(still_pending);
    }
    rescued = false;
    if (!pending.empty()) {
      ContextPtr ctx;
      for (int c = 0; c < ambient && !ctx; ++c) {
        if (!pending.front().coords[c].is_zero()) ctx = pending.front().coords[c].context();
      }
      auto extra = rescue_pivots(pending, ctx, ambient);
      if (!extra.empty()) {
        rescued = true;
        for (auto& row : extra) pending.push_back(std::move(row));
      }
    }
  }
  if (!pending.empty()) {
    int c = 0;
    while (pending.front().coords[c].is_zero()) ++c;
    throw IndeterminatePivot(
        "cannot decide whether '" + poly_to_text(pending.front().coords[c]) +
        "' vanishes under the declared assumptions");
  }
  std::sort(pivots.begin(), pivots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [col, row] : pivots) {
    out.pivot_cols.push_back(col);
    out.rows.push_back(std::move(row));
  }
  return out;
}

// Each reduced row may touch only its own pivot column, otherwise the span
// has a direction mixing axes and is not a coordinate subspace.
void require_coordinate(const Reduced& r) {
  for (size_t k = 0; k < r.rows.size(); ++k) {
    for (int c = 0; c < r.rows[k].dim(); ++c) {
      if (c != r.pivot_cols[k] && !r.rows[k].coords[c].is_zero()) {
        throw IndeterminatePivot(
            "span does not reduce to a coordinate subspace under the "
            "declared assumptions");
      }
    }
  }
}

}  // namespace

bool provably_nonzero(const Polynomial& p) {
  Monomial m;
  Rational c;
  if (!p.single_term(m, c) || c == 0) return false;
  const auto& ctx = p.context();
  for (const auto& [sym, exp] : m.factors) {
    if (!ctx->is_positive(sym)) return false;
  }
  return true;
}

Subspace coordinate_row_span(const std::vector<AlgebraVector>& rows, int ambient) {
  const Reduced r = reduce_rows(rows, ambient);
  require_coordinate(r);
  return Subspace{ambient, r.pivot_cols};
}

Subspace coordinate_nullspace(const std::vector<AlgebraVector>& rows, int ambient) {
  const Reduced r = reduce_rows(rows, ambient);
  require_coordinate(r);
  return orthogonal_complement(Subspace{ambient, r.pivot_cols});
}

}  // namespace nilgeo
