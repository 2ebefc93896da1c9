#include "psifloor/diagram.hpp"

#include <algorithm>
#include <numeric>

namespace psifloor {

PsiFloorDiagram::PsiFloorDiagram(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  const int n = vertex_count();
  for (const Vertex& v : vertices_) {
    if (v.degree < 0 || v.psi < 0) throw StructuralError("vertex decorations must be non-negative");
  }
  for (const Edge& e : edges_) {
    if (e.src < 0 || e.src >= n || e.tgt < 0 || e.tgt >= n) throw StructuralError("edge endpoint out of range");
    if (e.weight < 1) throw StructuralError("edge weights must be positive");
  }
  std::sort(edges_.begin(), edges_.end());
}

int PsiFloorDiagram::total_degree() const {
  int d = 0;
  for (const Vertex& v : vertices_) d += v.degree;
  return d;
}

int PsiFloorDiagram::divergence(int v) const {
  int div = 0;
  for (const Edge& e : edges_) {
    if (e.src == v) div += e.weight;
    if (e.tgt == v) div -= e.weight;
  }
  return div;
}

int PsiFloorDiagram::valence(int v) const {
  int val = 0;
  for (const Edge& e : edges_) val += (e.src == v) + (e.tgt == v);
  return val;
}

std::vector<int> PsiFloorDiagram::incident_edges(int v) const {
  std::vector<int> out;
  for (int e = 0; e < edge_count(); ++e) {
    if (edges_[e].src == v || edges_[e].tgt == v) out.push_back(e);
  }
  return out;
}

bool PsiFloorDiagram::is_internal(int e) const {
  const Edge& edge = edges_.at(e);
  return is_floor(edge.src) && is_floor(edge.tgt);
}

std::string to_string(Condition c) {
  switch (c) {
    case Condition::Tree: return "tree";
    case Condition::EdgeOrder: return "edge-order";
    case Condition::DegreeZeroEdge: return "degree-zero-edge";
    case Condition::EmptyVertex: return "empty-vertex";
    case Condition::StringInequality: return "string-inequality";
    case Condition::Divergence: return "divergence";
    case Condition::DegreeZeroValence: return "degree-zero-valence";
  }
  return "unknown";
}

namespace {

bool is_tree(const PsiFloorDiagram& diagram) {
  const int n = diagram.vertex_count();
  if (n == 0 || diagram.edge_count() != n - 1) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : diagram.edges()) {
    int a = find(e.src), b = find(e.tgt);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

// Relative degree-0 vertex: the a + 2 - val missing ends must carry total weight -div.
bool relative_zero_vertex_ok(int psi, int valence, int divergence) {
  const int ends = psi + 2 - valence;
  const int weight = -divergence;
  if (ends < 0 || weight < ends) return false;
  return (ends == 0) == (weight == 0);
}

}  // namespace

std::vector<Violation> validate(const PsiFloorDiagram& diagram, DiagramKind kind) {
  std::vector<Violation> out;
  const int n = diagram.vertex_count();
  if (!is_tree(diagram)) out.push_back({Condition::Tree, -1, -1, "graph is not a tree on its vertex set"});
  for (int e = 0; e < diagram.edge_count(); ++e) {
    const Edge& edge = diagram.edge(e);
    if (edge.src >= edge.tgt) out.push_back({Condition::EdgeOrder, -1, e, "edge does not increase the vertex order"});
    if (!diagram.is_floor(edge.src) && !diagram.is_floor(edge.tgt)) {
      out.push_back({Condition::DegreeZeroEdge, -1, e, "edge joins two degree-0 vertices"});
    }
  }
  for (int v = 0; v < n; ++v) {
    const Vertex& x = diagram.vertex(v);
    if (x.degree == 0 && x.psi == 0) out.push_back({Condition::EmptyVertex, v, -1, "vertex has d_v = a_v = 0"});
    if (x.psi - 2 * (x.degree - 1) < 0) {
      out.push_back({Condition::StringInequality, v, -1, "a_v - 2(d_v - 1) < 0"});
    }
    const int div = diagram.divergence(v);
    if (div > x.degree) out.push_back({Condition::Divergence, v, -1, "div(v) > d_v"});
    if (x.degree == 0) {
      const int val = diagram.valence(v);
      const bool ok = kind == DiagramKind::Absolute ? val == x.psi + 2 + div : relative_zero_vertex_ok(x.psi, val, div);
      if (!ok) out.push_back({Condition::DegreeZeroValence, v, -1, "valence condition fails at a degree-0 vertex"});
    }
  }
  return out;
}

namespace {

IntSeq psi_type(const PsiFloorDiagram& diagram, long whites) {
  IntSeq type(SeqBase::Zero);
  for (const Vertex& v : diagram.vertices()) type.add(v.psi, 1);
  type.add(0, static_cast<int>(whites));
  return type;
}

long psi_weight(const PsiFloorDiagram& diagram) {
  long w = 0;
  for (const Vertex& v : diagram.vertices()) w += v.psi;
  return w;
}

}  // namespace

DiagramSignature signature(const PsiFloorDiagram& diagram) {
  const int d = diagram.total_degree();
  const long whites = 3L * d - 1 - psi_weight(diagram) - diagram.vertex_count();
  if (whites < 0) throw DomainError("diagram cannot be marked: 3d - 1 - Ik - #V < 0");
  return {d, psi_type(diagram, whites)};
}

DiagramSignature relative_signature(const PsiFloorDiagram& diagram, const IntSeq& beta) {
  if (beta.base() != SeqBase::One) throw DomainError("beta must be indexed from 1");
  const int d = diagram.total_degree();
  const long whites = 2L * d + beta.size() - 1 - psi_weight(diagram) - diagram.vertex_count();
  if (whites < 0) throw DomainError("diagram cannot be marked: 2d + |beta| - 1 - Ik - #V < 0");
  return {d, psi_type(diagram, whites)};
}

Rational diagram_multiplicity(const PsiFloorDiagram& diagram) {
  Rational mu = 1;
  for (const Edge& e : diagram.edges()) {
    mu *= Integer(e.weight) * e.weight;
    if (!diagram.is_floor(e.src) || !diagram.is_floor(e.tgt)) mu /= e.weight;
  }
  for (int v = 0; v < diagram.vertex_count(); ++v) {
    if (!diagram.is_floor(v)) mu /= factorial(std::abs(diagram.divergence(v)));
  }
  mu.canonicalize();
  return mu;
}

std::vector<std::pair<int, int>> pruefer_decode(std::span<const int> code, int n) {
  std::vector<std::pair<int, int>> edges;
  if (n < 2) return edges;
  if (static_cast<int>(code.size()) != n - 2) throw StructuralError("Pruefer code length must be n - 2");
  std::vector<int> degree(n, 1);
  for (int c : code) {
    if (c < 0 || c >= n) throw StructuralError("Pruefer label out of range");
    ++degree[c];
  }
  for (int c : code) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
    --degree[leaf];
    --degree[c];
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (u < 0) {
        u = v;
      } else {
        edges.emplace_back(u, v);
      }
    }
  }
  return edges;
}

namespace {

struct WeightSearch {
  int d;
  DiagramKind kind;
  const std::vector<Vertex>& vertices;
  std::vector<std::pair<int, int>> edges;   // ordered for assignment
  std::vector<std::vector<int>> completes;  // vertices whose last edge is edges[i]
  std::vector<int> weights;
  std::vector<int> div;
  std::vector<int> val;
  const DiagramVisitor& visit;

  bool vertex_ok(int v) const {
    const Vertex& x = vertices[v];
    if (div[v] > x.degree) return false;
    if (x.degree > 0) return true;
    if (kind == DiagramKind::Absolute) return val[v] == x.psi + 2 + div[v];
    return relative_zero_vertex_ok(x.psi, val[v], div[v]);
  }

  void run(std::size_t i) {
    if (i == edges.size()) {
      std::vector<Edge> out;
      out.reserve(edges.size());
      for (std::size_t j = 0; j < edges.size(); ++j) out.push_back({edges[j].first, edges[j].second, weights[j]});
      visit(PsiFloorDiagram(vertices, std::move(out)));
      return;
    }
    auto [u, w] = edges[i];
    for (int weight = 1; weight <= d; ++weight) {
      weights[i] = weight;
      div[u] += weight;
      div[w] -= weight;
      bool ok = true;
      for (int v : completes[i]) ok = ok && vertex_ok(v);
      if (ok) run(i + 1);
      div[u] -= weight;
      div[w] += weight;
    }
  }
};

void visit_trees(int d, DiagramKind kind, const std::vector<Vertex>& vertices, const DiagramVisitor& visit) {
  const int n = static_cast<int>(vertices.size());
  if (n == 1) {
    const Vertex& x = vertices[0];
    // Single vertex: div = 0 and valence 0.
    bool ok = x.degree > 0 || (kind == DiagramKind::Absolute ? x.psi + 2 == 0 : relative_zero_vertex_ok(x.psi, 0, 0));
    if (ok) visit(PsiFloorDiagram(vertices, {}));
    return;
  }
  std::vector<int> code(n - 2, 0);
  while (true) {
    auto tree = pruefer_decode(code, n);
    std::vector<int> val(n, 0);
    bool ok = true;
    for (auto [u, w] : tree) {
      ++val[u];
      ++val[w];
      if (vertices[u].degree == 0 && vertices[w].degree == 0) ok = false;
    }
    for (int v = 0; v < n && ok; ++v) {
      if (vertices[v].degree == 0 && val[v] > vertices[v].psi + 2) ok = false;
    }
    if (ok) {
      std::sort(tree.begin(), tree.end(), [](auto a, auto b) {
        return std::pair(a.second, a.first) < std::pair(b.second, b.first);
      });
      std::vector<int> last(n, -1);
      for (int i = 0; i < static_cast<int>(tree.size()); ++i) {
        last[tree[i].first] = i;
        last[tree[i].second] = i;
      }
      std::vector<std::vector<int>> completes(tree.size());
      for (int v = 0; v < n; ++v) completes[last[v]].push_back(v);
      WeightSearch search{d, kind, vertices, tree, std::move(completes), std::vector<int>(tree.size(), 0),
                          std::vector<int>(n, 0), val, visit};
      search.run(0);
    }
    // Next code in lexicographic order.
    int pos = n - 3;
    while (pos >= 0 && code[pos] == n - 1) code[pos--] = 0;
    if (pos < 0) break;
    ++code[pos];
  }
}

void assign_degrees(int d, std::vector<Vertex>& vertices, std::size_t i, int remaining, DiagramKind kind,
                    const DiagramVisitor& visit) {
  if (i == vertices.size()) {
    if (remaining == 0) visit_trees(d, kind, vertices, visit);
    return;
  }
  const int psi = vertices[i].psi;
  const int lo = psi == 0 ? 1 : 0;
  const int hi = std::min(psi / 2 + 1, remaining);
  for (int deg = lo; deg <= hi; ++deg) {
    vertices[i].degree = deg;
    assign_degrees(d, vertices, i + 1, remaining - deg, kind, visit);
  }
  vertices[i].degree = 0;
}

}  // namespace

void for_each_diagram(int d, const IntSeq& k, DiagramKind kind, const DiagramVisitor& visit) {
  if (d < 1) throw DomainError("diagram enumeration requires d >= 1");
  if (k.base() != SeqBase::Zero) throw DomainError("type k must be indexed from 0");
  if (kind == DiagramKind::Absolute && k.weight() != 3L * d - 1 - k.size()) {
    throw DomainError("dimension condition Ik = 3d - 1 - |k| fails");
  }
  std::vector<int> positive;
  for (int i = 1; i < k.end_index(); ++i) positive.insert(positive.end(), k[i], i);
  for (int zeros = 0; zeros <= k[0]; ++zeros) {
    std::vector<int> psis = positive;
    psis.insert(psis.end(), zeros, 0);
    if (psis.empty()) continue;
    std::sort(psis.begin(), psis.end());
    do {
      std::vector<Vertex> vertices;
      for (int a : psis) vertices.push_back({0, a});
      assign_degrees(d, vertices, 0, d, kind, visit);
    } while (std::next_permutation(psis.begin(), psis.end()));
  }
}

std::vector<PsiFloorDiagram> enumerate_diagrams(int d, const IntSeq& k, DiagramKind kind) {
  std::vector<PsiFloorDiagram> out;
  for_each_diagram(d, k, kind, [&](const PsiFloorDiagram& D) { out.push_back(D); });
  return out;
}

}  // namespace psifloor
