#pragma once

#include <functional>
#include <vector>

#include "psifloor/marking.hpp"

namespace psifloor {

/// Per-vertex split of the tangency data; entries are base-1 sequences.
struct CompatiblePair {
  std::vector<IntSeq> alpha;
  std::vector<IntSeq> beta;
  friend bool operator==(const CompatiblePair&, const CompatiblePair&) = default;
};

/// Throws DomainError describing the first failed condition.
void check_pair(const PsiFloorDiagram& diagram, const IntSeq& alpha, const IntSeq& beta, const CompatiblePair& pair);

using PairVisitor = std::function<void(const CompatiblePair&)>;

/// Every compatible pair exactly once.  Throws DomainError unless I(alpha + beta) = d(D).
void for_each_compatible_pair(const PsiFloorDiagram& diagram, const IntSeq& alpha, const IntSeq& beta,
                              const PairVisitor& visit);
std::vector<CompatiblePair> enumerate_compatible_pairs(const PsiFloorDiagram& diagram, const IntSeq& alpha,
                                                       const IntSeq& beta);

/// I^beta * prod w^2 * prod_{edges at degree-0 vertices} 1/w * prod_{d_v = 0} 1/(beta(v)! I^beta(v)).
/// The last factor also divides out the weights of the free ends at a degree-0
/// vertex, since they too sit next to the contracted end.
Rational relative_diagram_multiplicity(const PsiFloorDiagram& diagram, const CompatiblePair& pair);

struct RelativeEdgeChoice {
  std::vector<EdgeOwner> owner;     // per edge
  std::vector<IntSeq> chosen_beta;  // c(v), base 1

  std::vector<int> chosen_edges(const PsiFloorDiagram& diagram, int v) const;
  bool is_chosen(int e) const { return owner.at(e) != EdgeOwner::None; }
  friend bool operator==(const RelativeEdgeChoice&, const RelativeEdgeChoice&) = default;
};

/// a_v + 2 - 2 d_v at a floor, 0 elsewhere.
int required_relative_choice_size(const PsiFloorDiagram& diagram, int v);

void check_relative_choice(const PsiFloorDiagram& diagram, const CompatiblePair& pair, const RelativeEdgeChoice& choice);

using RelativeChoiceVisitor = std::function<void(const RelativeEdgeChoice&)>;

void for_each_relative_choice(const PsiFloorDiagram& diagram, const CompatiblePair& pair,
                              const RelativeChoiceVisitor& visit);
std::vector<RelativeEdgeChoice> enumerate_relative_choices(const PsiFloorDiagram& diagram, const CompatiblePair& pair);

/// prod_v local(v) * prod_{e in C(v)} 1/w(e) * prod_v 1/c(v)!, where chosen
/// beta-ends of weight i contribute 1/i each and o(v) includes |alpha(v)|.
/// Edges to degree-0 vertices count in i(v) and o(v) as in the absolute case.
Rational relative_choice_multiplicity(const PsiFloorDiagram& diagram, const CompatiblePair& pair,
                                      const RelativeEdgeChoice& choice);

/// Beta-vertices at floors, subdivisions of non-chosen internal edges, and
/// optionally the alpha-vertices with their suffix and weight-order relations.
MarkingPoset build_relative_marking_poset(const PsiFloorDiagram& diagram, const CompatiblePair& pair,
                                          const RelativeEdgeChoice& choice, bool include_alpha);

/// Number of admissible alpha suffixes: prod_i alpha_i! / prod_v alpha(v)_i!.
Integer alpha_suffix_count(const CompatiblePair& pair);

/// nu^rel(D, C), counted as (non-alpha markings) * (alpha suffixes).
Integer count_relative_markings(const PsiFloorDiagram& diagram, const CompatiblePair& pair,
                                const RelativeEdgeChoice& choice);

}  // namespace psifloor
