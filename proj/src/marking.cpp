#include "psifloor/marking.hpp"

#include <map>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace psifloor {

int MarkingPoset::element_psi(const PsiFloorDiagram& diagram, int x) const {
  return x < base_count ? diagram.vertex(x).psi : 0;
}

std::vector<std::vector<int>> group_siblings(const std::vector<AddedVertex>& added) {
  std::map<std::tuple<int, int, int>, std::size_t> slot;
  std::vector<std::vector<int>> groups;
  for (int j = 0; j < static_cast<int>(added.size()); ++j) {
    const AddedVertex& a = added[j];
    if (a.kind == AddedKind::Subdivision) {
      groups.push_back({j});
      continue;
    }
    auto key = std::make_tuple(static_cast<int>(a.kind), a.attach, a.weight);
    auto [it, fresh] = slot.try_emplace(key, groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(j);
  }
  return groups;
}

MarkingPoset build_marking_poset(const PsiFloorDiagram& diagram, const EdgeChoice& choice) {
  MarkingPoset poset;
  poset.base_count = diagram.vertex_count();
  auto add = [&](AddedVertex a, int lower, int upper) {
    const int id = poset.size();
    poset.added.push_back(a);
    poset.relations.emplace_back(lower, id);
    if (upper >= 0) poset.relations.emplace_back(id, upper);
  };
  for (int v = 0; v < diagram.vertex_count(); ++v) {
    if (!diagram.is_floor(v)) continue;
    const int ends = ports(diagram, v).end_edges - choice.chosen_ends.at(v);
    for (int j = 0; j < ends; ++j) add({AddedKind::End, v, -1, 1}, v, -1);
  }
  for (int e = 0; e < diagram.edge_count(); ++e) {
    if (!diagram.is_internal(e) || choice.is_chosen(e)) continue;
    const Edge& edge = diagram.edge(e);
    add({AddedKind::Subdivision, -1, e, edge.weight}, edge.src, edge.tgt);
  }
  poset.sibling_groups = group_siblings(poset.added);
  return poset;
}

namespace {

struct Compiled {
  int n = 0;
  int m = 0;
  std::vector<std::uint64_t> base_pred;  // added elements that must precede base p
  std::vector<std::uint64_t> added_pred;
  std::vector<int> added_after_base;     // largest base index below added j, or -1
};

void check_acyclic(const MarkingPoset& poset) {
  const int total = poset.size();
  std::vector<std::vector<int>> succ(total);
  std::vector<int> indeg(total, 0);
  auto link = [&](int x, int y) {
    succ[x].push_back(y);
    ++indeg[y];
  };
  for (int b = 1; b < poset.base_count; ++b) link(b - 1, b);
  for (auto [x, y] : poset.relations) {
    if (x < 0 || y < 0 || x >= total || y >= total) throw StructuralError("relation element out of range");
    link(x, y);
  }
  std::vector<int> ready;
  for (int x = 0; x < total; ++x) {
    if (indeg[x] == 0) ready.push_back(x);
  }
  int seen = 0;
  while (!ready.empty()) {
    int x = ready.back();
    ready.pop_back();
    ++seen;
    for (int y : succ[x]) {
      if (--indeg[y] == 0) ready.push_back(y);
    }
  }
  if (seen != total) throw StructuralError("marking constraints contain a cycle");
}

Compiled compile(const MarkingPoset& poset) {
  check_acyclic(poset);
  Compiled c;
  c.n = poset.base_count;
  c.m = static_cast<int>(poset.added.size());
  if (c.m > 62) throw DomainError("too many added vertices for the extension counter");
  c.base_pred.assign(c.n, 0);
  c.added_pred.assign(c.m, 0);
  c.added_after_base.assign(c.m, -1);
  for (auto [x, y] : poset.relations) {
    if (y < c.n) {
      if (x >= c.n) c.base_pred[y] |= std::uint64_t{1} << (x - c.n);
      // base < base is implied by the chain (a reversed pair was caught as a cycle)
    } else if (x < c.n) {
      c.added_after_base[y - c.n] = std::max(c.added_after_base[y - c.n], x);
    } else {
      c.added_pred[y - c.n] |= std::uint64_t{1} << (x - c.n);
    }
  }
  return c;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("linear extension count exceeds 64 bits");
  return r;
}

class ExtensionCounter {
 public:
  explicit ExtensionCounter(const Compiled& c) : c_(c), full_((c.m == 64) ? ~0ull : ((std::uint64_t{1} << c.m) - 1)) {
    const std::uint64_t states = static_cast<std::uint64_t>(c.n + 1) << c.m;
    if (c.m <= 22 && states <= (1ull << 24)) dense_.assign(states, kUnknown);
  }

  std::uint64_t count(int p, std::uint64_t mask) {
    if (p == c_.n && mask == full_) return 1;
    const std::uint64_t key = (static_cast<std::uint64_t>(p) << c_.m) | mask;
    if (!dense_.empty()) {
      if (dense_[key] != kUnknown) return dense_[key];
    } else if (auto it = sparse_.find(key); it != sparse_.end()) {
      return it->second;
    }
    std::uint64_t total = 0;
    if (p < c_.n && (c_.base_pred[p] & ~mask) == 0) total = checked_add(total, count(p + 1, mask));
    for (int j = 0; j < c_.m; ++j) {
      const std::uint64_t bit = std::uint64_t{1} << j;
      if ((mask & bit) || c_.added_after_base[j] >= p || (c_.added_pred[j] & ~mask)) continue;
      total = checked_add(total, count(p, mask | bit));
    }
    if (!dense_.empty()) {
      dense_[key] = total;
    } else {
      sparse_.emplace(key, total);
    }
    return total;
  }

 private:
  static constexpr std::uint64_t kUnknown = ~0ull;
  const Compiled& c_;
  std::uint64_t full_;
  std::vector<std::uint64_t> dense_;
  std::unordered_map<std::uint64_t, std::uint64_t> sparse_;
};

}  // namespace

Integer count_linear_extensions(const MarkingPoset& poset) {
  const Compiled c = compile(poset);
  ExtensionCounter counter(c);
  const std::uint64_t n = counter.count(0, 0);
  Integer r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
  return r;
}

Integer sibling_quotient(const MarkingPoset& poset, const Integer& labeled) {
  Integer denom = 1;
  for (const auto& g : poset.sibling_groups) denom *= factorial(static_cast<long>(g.size()));
  if (labeled % denom != 0) throw std::logic_error("labeled extension count is not divisible by the sibling factorials");
  return labeled / denom;
}

Integer count_markings(const PsiFloorDiagram& diagram, const EdgeChoice& choice) {
  const MarkingPoset poset = build_marking_poset(diagram, choice);
  return sibling_quotient(poset, count_linear_extensions(poset));
}

void for_each_marking(const MarkingPoset& poset, const OrderVisitor& visit) {
  Compiled c = compile(poset);
  // Siblings are placed in index order, one representative per class.
  for (const auto& g : poset.sibling_groups) {
    for (std::size_t j = 1; j < g.size(); ++j) c.added_pred[g[j]] |= std::uint64_t{1} << g[j - 1];
  }
  std::vector<int> order;
  order.reserve(poset.size());
  const std::uint64_t full = c.m == 64 ? ~0ull : ((std::uint64_t{1} << c.m) - 1);
  std::function<void(int, std::uint64_t)> rec = [&](int p, std::uint64_t mask) {
    if (p == c.n && mask == full) {
      visit(order);
      return;
    }
    if (p < c.n && (c.base_pred[p] & ~mask) == 0) {
      order.push_back(p);
      rec(p + 1, mask);
      order.pop_back();
    }
    for (int j = 0; j < c.m; ++j) {
      const std::uint64_t bit = std::uint64_t{1} << j;
      if ((mask & bit) || c.added_after_base[j] >= p || (c.added_pred[j] & ~mask)) continue;
      order.push_back(c.n + j);
      rec(p, mask | bit);
      order.pop_back();
    }
  };
  rec(0, 0);
}

}  // namespace psifloor
