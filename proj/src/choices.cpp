#include "psifloor/choices.hpp"

#include <algorithm>
#include <bit>

namespace psifloor {

VertexPorts ports(const PsiFloorDiagram& diagram, int v) {
  if (!diagram.is_floor(v)) throw DomainError("ports are undefined at a degree-0 vertex");
  VertexPorts p;
  for (int e : diagram.incident_edges(v)) {
    const Edge& edge = diagram.edge(e);
    if (!diagram.is_internal(e)) {
      ++(edge.tgt == v ? p.incoming_zero : p.outgoing_zero);
      continue;
    }
    if (edge.tgt == v) {
      p.incoming_internal.emplace_back(e, edge.weight);
    } else {
      p.outgoing_internal.emplace_back(e, edge.weight);
    }
  }
  p.end_edges = diagram.vertex(v).degree - diagram.divergence(v);
  return p;
}

std::vector<int> EdgeChoice::chosen_edges(const PsiFloorDiagram& diagram, int v) const {
  std::vector<int> out;
  for (int e = 0; e < diagram.edge_count(); ++e) {
    const Edge& edge = diagram.edge(e);
    if ((owner[e] == EdgeOwner::Source && edge.src == v) || (owner[e] == EdgeOwner::Target && edge.tgt == v)) {
      out.push_back(e);
    }
  }
  return out;
}

int required_choice_size(const PsiFloorDiagram& diagram, int v) {
  const Vertex& x = diagram.vertex(v);
  return x.degree > 0 ? x.psi - 2 * (x.degree - 1) : 0;
}

void check_choice(const PsiFloorDiagram& diagram, const EdgeChoice& choice) {
  if (static_cast<int>(choice.owner.size()) != diagram.edge_count() ||
      static_cast<int>(choice.chosen_ends.size()) != diagram.vertex_count()) {
    throw DomainError("edge choice does not match the diagram shape");
  }
  for (int e = 0; e < diagram.edge_count(); ++e) {
    if (choice.is_chosen(e) && !diagram.is_internal(e)) throw DomainError("edge at a degree-0 vertex is chosen");
  }
  for (int v = 0; v < diagram.vertex_count(); ++v) {
    const int chosen = static_cast<int>(choice.chosen_edges(diagram, v).size()) + choice.chosen_ends[v];
    if (!diagram.is_floor(v)) {
      if (chosen != 0) throw DomainError("C(v) must be empty at a degree-0 vertex");
      continue;
    }
    if (choice.chosen_ends[v] < 0 || choice.chosen_ends[v] > ports(diagram, v).end_edges) {
      throw DomainError("more chosen ends than end edges");
    }
    if (chosen != required_choice_size(diagram, v)) throw DomainError("|C(v)| != a_v - 2(d_v - 1)");
  }
}

namespace {

struct ChoiceSearch {
  const PsiFloorDiagram& diagram;
  const ChoiceVisitor& visit;
  EdgeChoice choice;
  std::vector<int> ends_available;

  void run(int v) {
    if (v == diagram.vertex_count()) {
      visit(choice);
      return;
    }
    if (!diagram.is_floor(v)) {
      run(v + 1);
      return;
    }
    std::vector<int> open;
    for (int e : diagram.incident_edges(v)) {
      if (diagram.is_internal(e) && !choice.is_chosen(e)) open.push_back(e);
    }
    const int need = required_choice_size(diagram, v);
    const unsigned limit = 1u << open.size();
    for (unsigned mask = 0; mask < limit; ++mask) {
      const int ends = need - std::popcount(mask);
      if (ends < 0 || ends > ends_available[v]) continue;
      for (std::size_t j = 0; j < open.size(); ++j) {
        if (mask >> j & 1u) {
          choice.owner[open[j]] = diagram.edge(open[j]).src == v ? EdgeOwner::Source : EdgeOwner::Target;
        }
      }
      choice.chosen_ends[v] = ends;
      run(v + 1);
      for (int e : open) choice.owner[e] = EdgeOwner::None;
      choice.chosen_ends[v] = 0;
    }
  }
};

}  // namespace

void for_each_choice(const PsiFloorDiagram& diagram, const ChoiceVisitor& visit) {
  ChoiceSearch search{diagram, visit, {}, std::vector<int>(diagram.vertex_count(), 0)};
  search.choice.owner.assign(diagram.edge_count(), EdgeOwner::None);
  search.choice.chosen_ends.assign(diagram.vertex_count(), 0);
  for (int v = 0; v < diagram.vertex_count(); ++v) {
    if (diagram.is_floor(v)) search.ends_available[v] = ports(diagram, v).end_edges;
  }
  search.run(0);
}

std::vector<EdgeChoice> enumerate_choices(const PsiFloorDiagram& diagram) {
  std::vector<EdgeChoice> out;
  for_each_choice(diagram, [&](const EdgeChoice& c) { out.push_back(c); });
  return out;
}

Rational local_multiplicity(int degree, int incoming, int outgoing) {
  if (degree == 0) return 1;
  Rational r(int_pow(degree, incoming) * int_pow(degree, outgoing), factorial(degree) * factorial(degree));
  r.canonicalize();
  return r;
}

Rational choice_multiplicity(const PsiFloorDiagram& diagram, const EdgeChoice& choice) {
  Rational mu = 1;
  for (int v = 0; v < diagram.vertex_count(); ++v) {
    if (!diagram.is_floor(v)) continue;
    const VertexPorts p = ports(diagram, v);
    const std::vector<int> mine = choice.chosen_edges(diagram, v);
    auto mine_has = [&](int e) { return std::find(mine.begin(), mine.end(), e) != mine.end(); };
    int incoming = p.incoming_zero;
    int outgoing = p.outgoing_zero + p.end_edges - choice.chosen_ends[v];
    for (auto [e, w] : p.incoming_internal) incoming += !mine_has(e);
    for (auto [e, w] : p.outgoing_internal) outgoing += !mine_has(e);
    mu *= local_multiplicity(diagram.vertex(v).degree, incoming, outgoing);
    mu /= factorial(choice.chosen_ends[v]);
    for (int e : mine) mu /= diagram.edge(e).weight;
  }
  mu.canonicalize();
  return mu;
}

}  // namespace psifloor
