#pragma once
// Basis normalization for forms satisfying the Postnikov-Wu identity.
//
// Orientable case: the symmetric pairing B(x,y) = nu(x,x,y) is decomposed
// into diagonal [1] blocks, hyperbolic pairs and a radical. Over GF(2) a
// non-alternating symmetric form diagonalizes completely, so the report is
// either pure diagonal or pure hyperbolic, which makes (diagonal, pairs,
// radical) a basis-change invariant.
//
// Nonorientable case: the alternating pairing W(x,y) = nu(w,x,y) is put in
// symplectic shape with e1 = w kept as the first basis vector. When w^2 != 0
// the first pair is (e1, e2); otherwise w lies in the radical of W and the
// pairs start at e2.

#include <utility>
#include <vector>

#include "ms3/forms.hpp"

namespace ms3 {

struct OrientableReport {
  int diag_blocks = 0;      // basis vectors with nonzero cube, pairwise orthogonal
  int hyperbolic_pairs = 0; // cube-free pairs with B = [[0,1],[1,0]]
  int radical_dim = 0;
  bool operator==(const OrientableReport&) const = default;
};

struct NonorientableReport {
  int sigma = 0;                  // rank of W, always even
  bool w_square_nonzero = false;  // W(w,-) != 0, i.e. the first pair contains w
  std::vector<std::pair<int, int>> pairs;  // 0-based index pairs in the new basis
  bool operator==(const NonorientableReport&) const = default;
};

struct OrientableNormalization {
  F2Matrix change;  // pullback(f, change) is in the reported block shape
  OrientableReport report;
};

struct NonorientableNormalization {
  F2Matrix change;  // column 0 is w; pullback transports w to e1
  NonorientableReport report;
};

/// Requires check_pw(f, 0).
OrientableNormalization normalize_orientable(const SymTrilinearForm& f);

/// Requires check_pw(f, w) and w != 0.
NonorientableNormalization normalize_nonorientable(const SymTrilinearForm& f, const F2Vector& w);

}  // namespace ms3
