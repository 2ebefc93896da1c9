#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "psifloor/choices.hpp"

namespace psifloor {

enum class AddedKind { End, Subdivision, Alpha, Beta };

struct AddedVertex {
  AddedKind kind = AddedKind::End;
  int attach = -1;  // base vertex (ends, alpha, beta)
  int edge = -1;    // subdivided edge
  int weight = 1;
  friend bool operator==(const AddedVertex&, const AddedVertex&) = default;
};

/// Elements 0..base_count-1 are the diagram vertices in their fixed order;
/// element base_count + j is added[j].  A relation (x, y) reads x < y.
struct MarkingPoset {
  int base_count = 0;
  std::vector<AddedVertex> added;
  std::vector<std::pair<int, int>> relations;
  std::vector<std::vector<int>> sibling_groups;  // indices into added

  int size() const { return base_count + static_cast<int>(added.size()); }
  /// Psi-power of element x in the marked diagram (added vertices carry 0).
  int element_psi(const PsiFloorDiagram& diagram, int x) const;
};

/// Groups added vertices by (kind, attach, weight); subdivisions stay singletons.
std::vector<std::vector<int>> group_siblings(const std::vector<AddedVertex>& added);

/// Ends at floors for non-chosen end edges and one subdivision per non-chosen
/// internal edge.  Edges at degree-0 vertices are left alone.
MarkingPoset build_marking_poset(const PsiFloorDiagram& diagram, const EdgeChoice& choice);

/// Labeled linear extensions of the base chain plus relations.  Throws
/// StructuralError on a cycle and DomainError past 62 added vertices.
Integer count_linear_extensions(const MarkingPoset& poset);

/// Labeled count divided by the sibling factorials.  Throws std::logic_error
/// if the quotient is not integral.
Integer sibling_quotient(const MarkingPoset& poset, const Integer& labeled);

/// nu(D, C).
Integer count_markings(const PsiFloorDiagram& diagram, const EdgeChoice& choice);

/// Visits one linear order per marking (siblings appear in index order).
/// The argument lists element ids from left to right.
using OrderVisitor = std::function<void(const std::vector<int>&)>;
void for_each_marking(const MarkingPoset& poset, const OrderVisitor& visit);

}  // namespace psifloor
