#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "psifloor/diagram.hpp"

namespace psifloor {

/// I(v), O(v) at a floor.  Pairs are (edge id, weight).
struct VertexPorts {
  std::vector<std::pair<int, int>> incoming_internal;
  std::vector<std::pair<int, int>> outgoing_internal;
  int end_edges = 0;  // d_v - div(v) weight-1 ends
  // Edges to or from degree-0 vertices.  Never choosable, but they still
  // attach to one of the d_v strands of the floor.
  int incoming_zero = 0;
  int outgoing_zero = 0;
};

/// Throws DomainError at a degree-0 vertex.
VertexPorts ports(const PsiFloorDiagram& diagram, int v);

/// Which endpoint, if any, has chosen an internal edge.
enum class EdgeOwner { None, Source, Target };

struct EdgeChoice {
  std::vector<EdgeOwner> owner;   // per edge; always None off internal edges
  std::vector<int> chosen_ends;   // per vertex; 0 at degree-0 vertices

  /// Edge ids in C(v), ascending.
  std::vector<int> chosen_edges(const PsiFloorDiagram& diagram, int v) const;
  bool is_chosen(int e) const { return owner.at(e) != EdgeOwner::None; }

  friend bool operator==(const EdgeChoice&, const EdgeChoice&) = default;
};

/// Required |C(v)| = a_v - 2(d_v - 1) at a floor, 0 elsewhere.
int required_choice_size(const PsiFloorDiagram& diagram, int v);

/// Throws DomainError describing the first broken constraint.
void check_choice(const PsiFloorDiagram& diagram, const EdgeChoice& choice);

using ChoiceVisitor = std::function<void(const EdgeChoice&)>;

/// Every edge choice exactly once.  Floors are visited in diagram order and,
/// per floor, (chosen edge bitmask, end count) ascends lexicographically.
void for_each_choice(const PsiFloorDiagram& diagram, const ChoiceVisitor& visit);
std::vector<EdgeChoice> enumerate_choices(const PsiFloorDiagram& diagram);

/// (d^i / d!) (d^o / d!).
Rational local_multiplicity(int degree, int incoming, int outgoing);

/// mu(C) = prod_v local(v) / (chosen ends)! * prod_{e in C(v)} 1/w(e).
/// i(v) and o(v) count every unchosen edge at v, including those to degree-0 vertices.
Rational choice_multiplicity(const PsiFloorDiagram& diagram, const EdgeChoice& choice);

}  // namespace psifloor
