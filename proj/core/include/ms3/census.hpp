#pragma once
// Enumeration of Postnikov-Wu forms and their classification up to basis
// change at small rank.
//
// The identity is linear in the form bits for a fixed w, so the solution set
// is a linear space. Orbits are computed by BFS over that space under the
// pullback action of GL(rho,2) (w = 0) or of the stabilizer of e1 (w != 0);
// both preserve the solution space. All orderings are deterministic and the
// census output is byte-stable.

#include <cstdint>
#include <vector>

#include "ms3/forms.hpp"

namespace ms3 {

/// Linear space of forms satisfying check_pw(f, w), with coordinates read off
/// the free bit positions of the reduced constraint system.
struct PwSpace {
  int rho = 0;
  F2Vector w;
  std::vector<uint64_t> basis;     // packed forms, reduced echelon shape
  std::vector<int> free_positions; // multiset index owning each coordinate

  int dim() const { return static_cast<int>(basis.size()); }
  uint64_t size() const { return uint64_t{1} << dim(); }
  uint64_t packed_at(uint64_t index) const;
  SymTrilinearForm form_at(uint64_t index) const;
  uint64_t coord_of(uint64_t packed) const;
};

/// rho <= 5.
PwSpace enumerate_pw(int rho, const F2Vector& w);

/// Matrix of f -> pullback(f, g) on packed forms (the action is linear).
F2Matrix form_action_matrix(const F2Matrix& g, int rho);

/// Lexicographic order on serialized form bits (multiset index 0 first).
bool form_lex_less(uint64_t a, uint64_t b);

/// Orbit representative: w is reduced to its class representative (0 or e1)
/// and the form to the lexicographic minimum over the orbit. Equal canonicals
/// characterize isomorphism. rho <= 4.
MsDescriptor canonical(const MsDescriptor& d);

enum class WClass { zero, nonzero };

struct CensusClass {
  MsDescriptor representative;  // canonical form of the class
  uint64_t orbit_size = 0;
  int sq_rank = 0;
  int cup_kernel = 0;
  int sigma = 0;
};

struct Census {
  int rho = 0;
  WClass w_class = WClass::zero;
  uint64_t space_size = 0;
  std::vector<CensusClass> classes;  // sorted by representative
};

/// 1 <= rho <= 4. `threads` shards the action-graph construction; the result
/// is identical for any thread count.
Census census(int rho, WClass w_class, int threads = 1);

}  // namespace ms3
