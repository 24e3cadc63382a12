#pragma once
// Combinatorial surgery plans and their evaluation to descriptors.
//
// A plan lists framed components (framing 0 or 2), clasped pairs, borromean
// triples, and for nonorientable plans projective-plane strands and Klein
// blocks. Component indices are 1-based throughout, matching the serialized
// format. Evaluation uses the basis e_i <-> component i (orientable) or
// e_1 = w, e_{i+1} <-> component i (nonorientable) and superposes:
//
//   (1) nu(i,i,i) = framing(i)/2; a Klein block overrides the cubes of its
//       two strands with its k (a-strand) and m (q-strand) bits.
//   (2) nu(i,i,j) = [clasp {i,j}] + [Klein block with a=i, q=j].
//   (3) nu(i,j,k) = [borromean {i,j,k}] + T, where T = 1 iff at least two of
//       the three pairs carry clasps. Klein pairs do not count toward T; the
//       threshold is calibrated on the three-component fixture links and is
//       applied unchanged to larger triples.
//   (4) nonorientable extras: nu(w,w,i) = [i is a projective-plane strand],
//       nu(w,i,j) = [{i,j} are the strands of one Klein block], and every
//       other entry involving w is zero.

#include <array>
#include <string>
#include <vector>

#include "ms3/forms.hpp"

namespace ms3 {

struct KbBlock {
  int a_strand = 0;  // component whose square hits the other strand
  int q_strand = 0;
  int k = 0;  // cube bit of the a-strand
  int m = 0;  // cube bit of the q-strand
  bool operator==(const KbBlock&) const = default;
};

struct LinkPlan {
  bool orientable = true;
  int components = 0;
  std::vector<int> framings;                    // one value in {0,2} per component
  std::vector<std::pair<int, int>> clasps;      // unordered pairs
  std::vector<std::array<int, 3>> borromeans;   // unordered triples
  std::vector<int> rp2_blocks;                  // single components
  std::vector<KbBlock> kb_blocks;
  bool operator==(const LinkPlan&) const = default;
};

/// Violations of the plan grammar, one message per offending primitive.
std::vector<std::string> validate(const LinkPlan& p);

/// Evaluates a valid plan. The result always satisfies check_pw; that closure
/// is exercised exhaustively in the tests.
MsDescriptor eval_plan(const LinkPlan& p);

/// Disjoint union, relabeling the second plan's components upward. Plans must
/// agree on orientability; nonorientable plans share the single w class.
LinkPlan splice(const LinkPlan& p1, const LinkPlan& p2);

}  // namespace ms3
