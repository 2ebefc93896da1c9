#include "psifloor/relative.hpp"

#include <algorithm>
#include <bit>

namespace psifloor {

namespace {

// Calls fn(s) for every s <= bound entrywise, lexicographically from the top index.
template <class Fn>
void for_each_subsequence(const IntSeq& bound, Fn&& fn) {
  std::vector<int> entries(bound.entries().size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == entries.size()) {
      fn(IntSeq(bound.base(), entries));
      return;
    }
    const int top = bound[bound.first_index() + static_cast<int>(i)];
    for (int x = 0; x <= top; ++x) {
      entries[i] = x;
      rec(i + 1);
    }
    entries[i] = 0;
  };
  rec(0);
}

int vertex_tangency(const PsiFloorDiagram& diagram, int v) {
  return diagram.vertex(v).degree - diagram.divergence(v);
}

}  // namespace

void check_pair(const PsiFloorDiagram& diagram, const IntSeq& alpha, const IntSeq& beta, const CompatiblePair& pair) {
  const int n = diagram.vertex_count();
  if (static_cast<int>(pair.alpha.size()) != n || static_cast<int>(pair.beta.size()) != n) {
    throw DomainError("compatible pair does not match the diagram shape");
  }
  IntSeq sa(SeqBase::One), sb(SeqBase::One);
  for (int v = 0; v < n; ++v) {
    sa += pair.alpha[v];
    sb += pair.beta[v];
    if (pair.alpha[v].weight() + pair.beta[v].weight() != vertex_tangency(diagram, v)) {
      throw DomainError("I(alpha(v) + beta(v)) != d_v - div(v)");
    }
    if (!diagram.is_floor(v)) {
      if (!pair.alpha[v].is_zero()) throw DomainError("alpha(v) must vanish at a degree-0 vertex");
      if (pair.beta[v].size() != diagram.vertex(v).psi + 2 - diagram.valence(v)) {
        throw DomainError("|beta(v)| != a_v + 2 - val(v) at a degree-0 vertex");
      }
    }
  }
  if (sa != alpha || sb != beta) throw DomainError("compatible pair does not sum to (alpha, beta)");
}

void for_each_compatible_pair(const PsiFloorDiagram& diagram, const IntSeq& alpha, const IntSeq& beta,
                              const PairVisitor& visit) {
  if (alpha.base() != SeqBase::One || beta.base() != SeqBase::One) throw DomainError("alpha and beta are indexed from 1");
  if (alpha.weight() + beta.weight() != diagram.total_degree()) throw DomainError("I(alpha + beta) != d");
  const int n = diagram.vertex_count();
  CompatiblePair pair{std::vector<IntSeq>(n, IntSeq(SeqBase::One)), std::vector<IntSeq>(n, IntSeq(SeqBase::One))};
  std::function<void(int, const IntSeq&, const IntSeq&)> rec = [&](int v, const IntSeq& ra, const IntSeq& rb) {
    if (v == n) {
      if (ra.is_zero() && rb.is_zero()) visit(pair);
      return;
    }
    const int need = vertex_tangency(diagram, v);
    if (need < 0) return;
    const bool floor = diagram.is_floor(v);
    const long zero_ends = floor ? 0 : diagram.vertex(v).psi + 2 - diagram.valence(v);
    auto place_beta = [&](const IntSeq& a) {
      for_each_subsequence(rb, [&](const IntSeq& b) {
        if (a.weight() + b.weight() != need) return;
        if (!floor && b.size() != zero_ends) return;
        pair.alpha[v] = a;
        pair.beta[v] = b;
        rec(v + 1, ra - a, rb - b);
      });
    };
    if (floor) {
      for_each_subsequence(ra, [&](const IntSeq& a) {
        if (a.weight() <= need) place_beta(a);
      });
    } else {
      place_beta(IntSeq(SeqBase::One));
    }
    pair.alpha[v] = IntSeq(SeqBase::One);
    pair.beta[v] = IntSeq(SeqBase::One);
  };
  rec(0, alpha, beta);
}

std::vector<CompatiblePair> enumerate_compatible_pairs(const PsiFloorDiagram& diagram, const IntSeq& alpha,
                                                       const IntSeq& beta) {
  std::vector<CompatiblePair> out;
  for_each_compatible_pair(diagram, alpha, beta, [&](const CompatiblePair& p) { out.push_back(p); });
  return out;
}

Rational relative_diagram_multiplicity(const PsiFloorDiagram& diagram, const CompatiblePair& pair) {
  Rational mu = 1;
  for (const IntSeq& b : pair.beta) mu *= b.power_product();
  for (const Edge& e : diagram.edges()) {
    mu *= Integer(e.weight) * e.weight;
    if (!diagram.is_floor(e.src) || !diagram.is_floor(e.tgt)) mu /= e.weight;
  }
  for (int v = 0; v < diagram.vertex_count(); ++v) {
    if (!diagram.is_floor(v)) mu /= pair.beta[v].factorial_product() * pair.beta[v].power_product();
  }
  mu.canonicalize();
  return mu;
}

std::vector<int> RelativeEdgeChoice::chosen_edges(const PsiFloorDiagram& diagram, int v) const {
  std::vector<int> out;
  for (int e = 0; e < diagram.edge_count(); ++e) {
    const Edge& edge = diagram.edge(e);
    if ((owner[e] == EdgeOwner::Source && edge.src == v) || (owner[e] == EdgeOwner::Target && edge.tgt == v)) {
      out.push_back(e);
    }
  }
  return out;
}

int required_relative_choice_size(const PsiFloorDiagram& diagram, int v) {
  const Vertex& x = diagram.vertex(v);
  return x.degree > 0 ? x.psi + 2 - 2 * x.degree : 0;
}

void check_relative_choice(const PsiFloorDiagram& diagram, const CompatiblePair& pair, const RelativeEdgeChoice& choice) {
  if (static_cast<int>(choice.owner.size()) != diagram.edge_count() ||
      static_cast<int>(choice.chosen_beta.size()) != diagram.vertex_count()) {
    throw DomainError("relative edge choice does not match the diagram shape");
  }
  for (int e = 0; e < diagram.edge_count(); ++e) {
    if (choice.is_chosen(e) && !diagram.is_internal(e)) throw DomainError("edge at a degree-0 vertex is chosen");
  }
  for (int v = 0; v < diagram.vertex_count(); ++v) {
    const long chosen = static_cast<long>(choice.chosen_edges(diagram, v).size()) + choice.chosen_beta[v].size();
    if (!diagram.is_floor(v)) {
      if (chosen != 0) throw DomainError("C(v) must be empty at a degree-0 vertex");
      continue;
    }
    if (!choice.chosen_beta[v].leq(pair.beta.at(v))) throw DomainError("c(v) exceeds beta(v)");
    if (chosen != required_relative_choice_size(diagram, v)) throw DomainError("|C(v)| != a_v + 2 - 2 d_v");
  }
}

void for_each_relative_choice(const PsiFloorDiagram& diagram, const CompatiblePair& pair,
                              const RelativeChoiceVisitor& visit) {
  const int n = diagram.vertex_count();
  RelativeEdgeChoice choice{std::vector<EdgeOwner>(diagram.edge_count(), EdgeOwner::None),
                            std::vector<IntSeq>(n, IntSeq(SeqBase::One))};
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      visit(choice);
      return;
    }
    if (!diagram.is_floor(v)) {
      rec(v + 1);
      return;
    }
    std::vector<int> open;
    for (int e : diagram.incident_edges(v)) {
      if (diagram.is_internal(e) && !choice.is_chosen(e)) open.push_back(e);
    }
    const int need = required_relative_choice_size(diagram, v);
    const unsigned limit = 1u << open.size();
    for (unsigned mask = 0; mask < limit; ++mask) {
      const int rest = need - std::popcount(mask);
      if (rest < 0 || rest > pair.beta[v].size()) continue;
      for (std::size_t j = 0; j < open.size(); ++j) {
        if (mask >> j & 1u) {
          choice.owner[open[j]] = diagram.edge(open[j]).src == v ? EdgeOwner::Source : EdgeOwner::Target;
        }
      }
      for_each_subsequence(pair.beta[v], [&](const IntSeq& c) {
        if (c.size() != rest) return;
        choice.chosen_beta[v] = c;
        rec(v + 1);
      });
      choice.chosen_beta[v] = IntSeq(SeqBase::One);
      for (int e : open) choice.owner[e] = EdgeOwner::None;
    }
  };
  rec(0);
}

std::vector<RelativeEdgeChoice> enumerate_relative_choices(const PsiFloorDiagram& diagram, const CompatiblePair& pair) {
  std::vector<RelativeEdgeChoice> out;
  for_each_relative_choice(diagram, pair, [&](const RelativeEdgeChoice& c) { out.push_back(c); });
  return out;
}

Rational relative_choice_multiplicity(const PsiFloorDiagram& diagram, const CompatiblePair& pair,
                                      const RelativeEdgeChoice& choice) {
  Rational mu = 1;
  for (int v = 0; v < diagram.vertex_count(); ++v) {
    if (!diagram.is_floor(v)) continue;
    const std::vector<int> mine = choice.chosen_edges(diagram, v);
    auto mine_has = [&](int e) { return std::find(mine.begin(), mine.end(), e) != mine.end(); };
    int incoming = 0;
    int outgoing = static_cast<int>(pair.beta[v].size() - choice.chosen_beta[v].size() + pair.alpha[v].size());
    for (int e : diagram.incident_edges(v)) {
      if (mine_has(e)) continue;
      if (diagram.edge(e).tgt == v) {
        ++incoming;
      } else {
        ++outgoing;
      }
    }
    mu *= local_multiplicity(diagram.vertex(v).degree, incoming, outgoing);
    for (int e : mine) mu /= diagram.edge(e).weight;
    mu /= choice.chosen_beta[v].power_product();
    mu /= choice.chosen_beta[v].factorial_product();
  }
  mu.canonicalize();
  return mu;
}

MarkingPoset build_relative_marking_poset(const PsiFloorDiagram& diagram, const CompatiblePair& pair,
                                          const RelativeEdgeChoice& choice, bool include_alpha) {
  MarkingPoset poset;
  poset.base_count = diagram.vertex_count();
  auto add = [&](AddedVertex a, int lower, int upper) {
    const int id = poset.size();
    poset.added.push_back(a);
    poset.relations.emplace_back(lower, id);
    if (upper >= 0) poset.relations.emplace_back(id, upper);
    return id;
  };
  for (int v = 0; v < diagram.vertex_count(); ++v) {
    if (!diagram.is_floor(v)) continue;
    const IntSeq rest = pair.beta[v] - choice.chosen_beta[v];
    for (int i = rest.first_index(); i < rest.end_index(); ++i) {
      for (int j = 0; j < rest[i]; ++j) add({AddedKind::Beta, v, -1, i}, v, -1);
    }
  }
  for (int e = 0; e < diagram.edge_count(); ++e) {
    if (!diagram.is_internal(e) || choice.is_chosen(e)) continue;
    const Edge& edge = diagram.edge(e);
    add({AddedKind::Subdivision, -1, e, edge.weight}, edge.src, edge.tgt);
  }
  if (include_alpha) {
    const int plain = poset.size();
    std::vector<int> alphas;
    for (int v = 0; v < diagram.vertex_count(); ++v) {
      const IntSeq& a = pair.alpha[v];
      for (int i = a.first_index(); i < a.end_index(); ++i) {
        for (int j = 0; j < a[i]; ++j) alphas.push_back(add({AddedKind::Alpha, v, -1, i}, v, -1));
      }
    }
    for (int x : alphas) {
      for (int y = 0; y < plain; ++y) poset.relations.emplace_back(y, x);
      for (int y : alphas) {
        if (poset.added[y - poset.base_count].weight < poset.added[x - poset.base_count].weight) {
          poset.relations.emplace_back(y, x);
        }
      }
    }
  }
  poset.sibling_groups = group_siblings(poset.added);
  return poset;
}

Integer alpha_suffix_count(const CompatiblePair& pair) {
  IntSeq total(SeqBase::One);
  Integer denom = 1;
  for (const IntSeq& a : pair.alpha) {
    total += a;
    denom *= a.factorial_product();
  }
  return total.factorial_product() / denom;
}

Integer count_relative_markings(const PsiFloorDiagram& diagram, const CompatiblePair& pair,
                                const RelativeEdgeChoice& choice) {
  const MarkingPoset poset = build_relative_marking_poset(diagram, pair, choice, false);
  return sibling_quotient(poset, count_linear_extensions(poset)) * alpha_suffix_count(pair);
}

}  // namespace psifloor
