#pragma once

// Independent index-level implementation of the Koszul identity and the
// curvature definition over plain rational arrays. Shares no polynomial or
// geometry code with the library on purpose: it is the cross-check.

#include <vector>

#include "nilgeo/rational.hpp"

namespace oracle {

using nilgeo::Rational;

struct BruteForce {
  int n = 0;
  // c[i][j][k]: E_k coefficient of [E_i,E_j].
  std::vector<std::vector<std::vector<Rational>>> c;
  // gamma[i][j][k]: E_k coefficient of nabla_{E_i}E_j.
  std::vector<std::vector<std::vector<Rational>>> gamma;

  explicit BruteForce(int dim)
      : n(dim),
        c(dim, std::vector<std::vector<Rational>>(dim, std::vector<Rational>(dim))),
        gamma(c) {}

  void set_bracket(int i, int j, int k, const Rational& value) {
    c[i][j][k] = value;
    c[j][i][k] = -value;
  }

  void compute_connection() {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          gamma[i][j][k] = (c[i][j][k] - c[j][k][i] + c[k][i][j]) / 2;
        }
      }
    }
  }

  // E_l coefficient of R(E_i,E_j)E_k.
  Rational curvature(int i, int j, int k, int l) const {
    Rational out(0);
    for (int m = 0; m < n; ++m) {
      out += gamma[j][k][m] * gamma[i][m][l];
      out -= gamma[i][k][m] * gamma[j][m][l];
      out -= c[i][j][m] * gamma[m][k][l];
    }
    return out;
  }
};

}  // namespace oracle
