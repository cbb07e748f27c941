#include "nilgeo/algebra.hpp"

#include <algorithm>
#include <set>

#include "nilgeo/errors.hpp"
#include "nilgeo/linalg.hpp"
#include "nilgeo/poly_text.hpp"

namespace nilgeo {

AlgebraVector AlgebraVector::zero(ContextPtr ctx, int dim) {
  AlgebraVector v;
  v.coords.assign(dim, Polynomial(ctx));
  return v;
}

AlgebraVector AlgebraVector::basis(ContextPtr ctx, int dim, int index) {
  if (index < 0 || index >= dim) throw UsageError("basis index out of range");
  AlgebraVector v = zero(ctx, dim);
  v.coords[index] = Polynomial::constant(std::move(ctx), 1);
  return v;
}

bool AlgebraVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

AlgebraVector AlgebraVector::operator+(const AlgebraVector& other) const {
  if (dim() != other.dim()) throw UsageError("vector dimension mismatch");
  AlgebraVector out = *this;
  for (int i = 0; i < dim(); ++i) out.coords[i] += other.coords[i];
  return out;
}

AlgebraVector AlgebraVector::operator-(const AlgebraVector& other) const {
  if (dim() != other.dim()) throw UsageError("vector dimension mismatch");
  AlgebraVector out = *this;
  for (int i = 0; i < dim(); ++i) out.coords[i] -= other.coords[i];
  return out;
}

AlgebraVector AlgebraVector::operator-() const {
  AlgebraVector out = *this;
  for (auto& c : out.coords) c = -c;
  return out;
}

AlgebraVector AlgebraVector::operator*(const Rational& scalar) const {
  AlgebraVector out = *this;
  for (auto& c : out.coords) c *= scalar;
  return out;
}

AlgebraVector AlgebraVector::scaled(const Polynomial& factor) const {
  AlgebraVector out = *this;
  for (auto& c : out.coords) c = c * factor;
  return out;
}

Polynomial inner(const AlgebraVector& u, const AlgebraVector& v) {
  if (u.dim() != v.dim()) throw UsageError("vector dimension mismatch");
  Polynomial out(u.coords.empty() ? ContextPtr() : u.coords[0].context());
  for (int i = 0; i < u.dim(); ++i) out += u.coords[i] * v.coords[i];
  return out;
}

bool Subspace::contains_axis(int index) const {
  return std::binary_search(basis_indices.begin(), basis_indices.end(), index);
}

std::string Subspace::description(const std::vector<std::string>& basis_names) const {
  if (basis_indices.empty()) return "0";
  if (dim() == ambient) return "full";
  std::string out = "span{";
  for (size_t k = 0; k < basis_indices.size(); ++k) {
    if (k) out += ",";
    out += basis_names.at(basis_indices[k]);
  }
  return out + "}";
}

std::vector<AlgebraVector> Subspace::generators(ContextPtr ctx) const {
  std::vector<AlgebraVector> out;
  for (int i : basis_indices) out.push_back(AlgebraVector::basis(ctx, ambient, i));
  return out;
}

Subspace orthogonal_complement(const Subspace& s) {
  Subspace out{s.ambient, {}};
  for (int i = 0; i < s.ambient; ++i) {
    if (!s.contains_axis(i)) out.basis_indices.push_back(i);
  }
  return out;
}

MetricLieAlgebra::MetricLieAlgebra(ContextPtr ctx, std::vector<std::string> basis_names,
                                   std::map<std::pair<int, int>, AlgebraVector> brackets,
                                   bool check_jacobi)
    : ctx_(std::move(ctx)), basis_names_(std::move(basis_names)), brackets_(std::move(brackets)) {
  const int n = dim();
  std::set<std::string> seen(basis_names_.begin(), basis_names_.end());
  if (static_cast<int>(seen.size()) != n) {
    throw ValidationError("basis names must be distinct");
  }
  for (const auto& [key, value] : brackets_) {
    const auto [i, j] = key;
    if (i < 0 || j >= n || i >= j) {
      throw ValidationError("bracket keys must satisfy 0 <= i < j < dim");
    }
    if (value.dim() != n) throw ValidationError("bracket value dimension mismatch");
    for (const auto& c : value.coords) {
      if (!c.is_zero() && c.context() != ctx_) {
        throw UsageError("bracket coordinates built over a different context");
      }
    }
  }
  if (check_jacobi) {
    const auto failures = jacobi_failures();
    if (!failures.empty()) throw ValidationError(failures.front());
  }
}

AlgebraVector MetricLieAlgebra::basis_bracket(int i, int j) const {
  const int n = dim();
  if (i < 0 || i >= n || j < 0 || j >= n) throw UsageError("basis index out of range");
  if (i == j) return AlgebraVector::zero(ctx_, n);
  const bool flip = i > j;
  auto it = brackets_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == brackets_.end()) return AlgebraVector::zero(ctx_, n);
  return flip ? -it->second : it->second;
}

AlgebraVector MetricLieAlgebra::bracket(const AlgebraVector& u, const AlgebraVector& v) const {
  const int n = dim();
  if (u.dim() != n || v.dim() != n) throw UsageError("vector dimension mismatch");
  AlgebraVector out = AlgebraVector::zero(ctx_, n);
  for (const auto& [key, value] : brackets_) {
    const auto [i, j] = key;
    const Polynomial weight = u.coords[i] * v.coords[j] - u.coords[j] * v.coords[i];
    if (weight.is_zero()) continue;
    out = out + value.scaled(weight);
  }
  return out;
}

std::vector<std::string> MetricLieAlgebra::jacobi_failures() const {
  std::vector<std::string> out;
  const int n = dim();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const AlgebraVector cyclic = bracket(basis_bracket(i, j), AlgebraVector::basis(ctx_, n, k)) +
                                     bracket(basis_bracket(j, k), AlgebraVector::basis(ctx_, n, i)) +
                                     bracket(basis_bracket(k, i), AlgebraVector::basis(ctx_, n, j));
        if (!cyclic.is_zero()) {
          out.push_back("Jacobi identity fails on (" + basis_names_[i] + "," +
                        basis_names_[j] + "," + basis_names_[k] + ")");
        }
      }
    }
  }
  return out;
}

MetricLieAlgebra MetricLieAlgebra::with_context(const ContextPtr& target) const {
  std::map<std::pair<int, int>, AlgebraVector> brackets;
  for (const auto& [key, value] : brackets_) {
    AlgebraVector mapped = AlgebraVector::zero(target, dim());
    for (int i = 0; i < dim(); ++i) mapped.coords[i] = value.coords[i].remapped(target);
    brackets.emplace(key, std::move(mapped));
  }
  return MetricLieAlgebra(target, basis_names_, std::move(brackets), false);
}

Subspace derived_subalgebra(const MetricLieAlgebra& g) {
  std::vector<AlgebraVector> rows;
  for (const auto& [key, value] : g.stored_brackets()) rows.push_back(value);
  return coordinate_row_span(rows, g.dim());
}

std::vector<Subspace> lower_central_series(const MetricLieAlgebra& g) {
  const int n = g.dim();
  Subspace full{n, {}};
  for (int i = 0; i < n; ++i) full.basis_indices.push_back(i);
  std::vector<Subspace> series{full};
  while (true) {
    std::vector<AlgebraVector> rows;
    for (int i = 0; i < n; ++i) {
      for (int j : series.back().basis_indices) rows.push_back(g.basis_bracket(i, j));
    }
    Subspace next = coordinate_row_span(rows, n);
    if (next == series.back()) return series;
    series.push_back(std::move(next));
    if (series.back().is_zero()) return series;
  }
}

int nilpotency_class(const MetricLieAlgebra& g) {
  const auto series = lower_central_series(g);
  if (!series.back().is_zero()) {
    throw NotNilpotent("lower central series stabilizes at " +
                       series.back().description(g.basis_names()));
  }
  return static_cast<int>(series.size()) - 1;
}

}  // namespace nilgeo
