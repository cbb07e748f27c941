#pragma once

#include <map>
#include <string>
#include <vector>

#include "nilgeo/polynomial.hpp"

namespace nilgeo {

/// Element of the algebra as polynomial coordinates over the orthonormal
/// basis E1..En.
struct AlgebraVector {
  std::vector<Polynomial> coords;

  static AlgebraVector zero(ContextPtr ctx, int dim);
  static AlgebraVector basis(ContextPtr ctx, int dim, int index);

  int dim() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;

  AlgebraVector operator+(const AlgebraVector& other) const;
  AlgebraVector operator-(const AlgebraVector& other) const;
  AlgebraVector operator-() const;
  AlgebraVector operator*(const Rational& scalar) const;
  AlgebraVector scaled(const Polynomial& factor) const;
  bool operator==(const AlgebraVector& other) const { return coords == other.coords; }
};

/// Inner product for the orthonormal basis: sum of coordinate products.
Polynomial inner(const AlgebraVector& u, const AlgebraVector& v);

/// A coordinate subspace span{E_i : i in basis_indices}. All spans this
/// library produces reduce to coordinate subspaces under the pivot
/// discipline; anything else raises IndeterminatePivot upstream.
struct Subspace {
  int ambient = 0;
  std::vector<int> basis_indices;  // sorted, 0-based

  int dim() const { return static_cast<int>(basis_indices.size()); }
  bool contains_axis(int index) const;
  bool is_zero() const { return basis_indices.empty(); }

  /// "0", "span{E1,E2}", or "full".
  std::string description(const std::vector<std::string>& basis_names) const;
  std::vector<AlgebraVector> generators(ContextPtr ctx) const;
  bool operator==(const Subspace& other) const = default;
};

Subspace orthogonal_complement(const Subspace& s);

/// Lie algebra with a fixed orthonormal basis, given by brackets of basis
/// pairs. Brackets are stored for i < j only; [Ej,Ei] = -[Ei,Ej] and
/// [Ei,Ei] = 0 follow.
class MetricLieAlgebra {
public:
  MetricLieAlgebra(ContextPtr ctx, std::vector<std::string> basis_names,
                   std::map<std::pair<int, int>, AlgebraVector> brackets,
                   bool check_jacobi = true);

  const ContextPtr& context() const { return ctx_; }
  int dim() const { return static_cast<int>(basis_names_.size()); }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  const std::map<std::pair<int, int>, AlgebraVector>& stored_brackets() const {
    return brackets_;
  }

  /// [E_i, E_j] for any index pair.
  AlgebraVector basis_bracket(int i, int j) const;
  /// Bilinear extension of the bracket.
  AlgebraVector bracket(const AlgebraVector& u, const AlgebraVector& v) const;

  /// Empty when the Jacobi identity holds; otherwise one message per
  /// failing triple.
  std::vector<std::string> jacobi_failures() const;

  /// Same algebra rebuilt over another context, matching symbols by name.
  MetricLieAlgebra with_context(const ContextPtr& target) const;

private:
  ContextPtr ctx_;
  std::vector<std::string> basis_names_;
  std::map<std::pair<int, int>, AlgebraVector> brackets_;
};

/// Span of all [E_i, E_j], reduced to a coordinate subspace.
Subspace derived_subalgebra(const MetricLieAlgebra& g);

/// g = C^0 ⊇ C^1 = [g,g] ⊇ C^2 = [g,C^1] ⊇ ... down to the first repeat.
std::vector<Subspace> lower_central_series(const MetricLieAlgebra& g);

/// Smallest k with C^k = 0; throws NotNilpotent when the series stalls.
int nilpotency_class(const MetricLieAlgebra& g);

}  // namespace nilgeo
