#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "psifloor/arith.hpp"

namespace psifloor {

struct Vertex {
  int degree = 0;  // d_v
  int psi = 0;     // a_v
  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

struct Edge {
  int src = 0;
  int tgt = 0;
  int weight = 1;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Malformed input (index out of range, non-positive weight).  Distinct from
/// the validity conditions checked by validate().
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A vertex-ordered weighted tree decorated with (degree, Psi-power) pairs.
/// The position of a vertex in `vertices()` is its place in the linear order;
/// edges are stored sorted so that equality is structural.
class PsiFloorDiagram {
 public:
  PsiFloorDiagram() = default;
  PsiFloorDiagram(std::vector<Vertex> vertices, std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Vertex& vertex(int v) const { return vertices_.at(v); }
  const Edge& edge(int e) const { return edges_.at(e); }

  bool is_floor(int v) const { return vertices_.at(v).degree > 0; }
  int total_degree() const;
  /// Outgoing minus incoming edge weight.
  int divergence(int v) const;
  int valence(int v) const;
  /// Edge ids incident to v, in edge order.
  std::vector<int> incident_edges(int v) const;
  /// An edge between two floors.
  bool is_internal(int e) const;

  friend bool operator==(const PsiFloorDiagram&, const PsiFloorDiagram&) = default;
  friend auto operator<=>(const PsiFloorDiagram&, const PsiFloorDiagram&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

enum class Condition {
  Tree,               // connected with #V - 1 edges
  EdgeOrder,          // (1) src < tgt
  DegreeZeroEdge,     // (2) no edge between two degree-0 vertices
  EmptyVertex,        // (3) d_v > 0 or a_v > 0
  StringInequality,   // (4) a_v - 2(d_v - 1) >= 0
  Divergence,         // (5) div(v) <= d_v
  DegreeZeroValence,  // (6) degree-0 valence condition
};

std::string to_string(Condition c);

struct Violation {
  Condition condition;
  int vertex = -1;
  int edge = -1;
  std::string message;
};

/// Absolute diagrams use val(v) = a_v + 2 + div(v) at degree-0 vertices.
/// Relative diagrams let the missing a_v + 2 - val(v) ends carry arbitrary
/// weights summing to -div(v); the compatible pair then fixes them.
enum class DiagramKind { Absolute, Relative };

/// Every violated condition; empty iff the diagram is valid.
/// Throws StructuralError for out-of-range indices or non-positive weights.
std::vector<Violation> validate(const PsiFloorDiagram& diagram, DiagramKind kind = DiagramKind::Absolute);

inline bool is_valid(const PsiFloorDiagram& diagram, DiagramKind kind = DiagramKind::Absolute) {
  return validate(diagram, kind).empty();
}

struct DiagramSignature {
  int degree = 0;
  IntSeq type{SeqBase::Zero};
  friend bool operator==(const DiagramSignature&, const DiagramSignature&) = default;
};

/// Degree and absolute type.  Throws DomainError when 3d - 1 - Ik - #V < 0.
DiagramSignature signature(const PsiFloorDiagram& diagram);

/// Degree and relative type for tangency profile beta (2d + |beta| - 1 - Ik - #V whites).
DiagramSignature relative_signature(const PsiFloorDiagram& diagram, const IntSeq& beta);

/// mu(D): prod w^2 * prod_{edges at degree-0 vertices} 1/w * prod_{d_v = 0} 1/|div(v)|!.
/// Evaluates the formula without re-validating.
Rational diagram_multiplicity(const PsiFloorDiagram& diagram);

using DiagramVisitor = std::function<void(const PsiFloorDiagram&)>;

/// Visits every valid diagram of degree d whose positive Psi-powers are
/// k_1, k_2, ... and which leaves |k| - #V >= 0 white vertices.  The order is
/// lexicographic in (vertex decorations, Pruefer code, edge weights).
/// Absolute enumeration requires Ik = 3d - 1 - |k|; relative callers check
/// their own dimension condition.
void for_each_diagram(int d, const IntSeq& k, DiagramKind kind, const DiagramVisitor& visit);

std::vector<PsiFloorDiagram> enumerate_diagrams(int d, const IntSeq& k, DiagramKind kind = DiagramKind::Absolute);

/// Decodes a Pruefer sequence over n labels into the edge list (smaller label first).
std::vector<std::pair<int, int>> pruefer_decode(std::span<const int> code, int n);

}  // namespace psifloor
