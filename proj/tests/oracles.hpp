#pragma once

// Slow reference implementations used only by the tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "psifloor/marking.hpp"

namespace oracle {

using psifloor::Integer;

// Number of set partitions of {0..e-1} into exactly g blocks, by listing
// restricted growth strings.
inline long stirling2_by_partitions(int e, int g) {
  if (e == 0) return g == 0 ? 1 : 0;
  std::vector<int> rgs(e, 0);
  long count = 0;
  std::vector<int> top(e, 0);  // max block index used in rgs[0..i]
  while (true) {
    if (top[e - 1] + 1 == g) ++count;
    int i = e - 1;
    while (i > 0 && rgs[i] > top[i - 1]) --i;
    if (i == 0) break;
    ++rgs[i];
    top[i] = std::max(top[i - 1], rgs[i]);
    for (int j = i + 1; j < e; ++j) {
      rgs[j] = 0;
      top[j] = top[i];
    }
  }
  return count;
}

// Permutations of all poset elements that keep the base chain in order and
// respect every relation.
inline Integer linear_extensions_by_permutations(const psifloor::MarkingPoset& poset) {
  const int n = poset.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> pos(n);
  Integer count = 0;
  do {
    for (int i = 0; i < n; ++i) pos[perm[i]] = i;
    bool ok = true;
    for (int b = 0; ok && b + 1 < poset.base_count; ++b) ok = pos[b] < pos[b + 1];
    for (auto [x, y] : poset.relations) {
      if (!ok) break;
      ok = pos[x] < pos[y];
    }
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// A poset shaped like the ones markings produce: a base chain with ends,
// beta-vertices hanging off base vertices and subdivisions between them.
inline psifloor::MarkingPoset random_marking_poset(std::mt19937_64& rng, int max_size) {
  using psifloor::AddedKind;
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  psifloor::MarkingPoset poset;
  poset.base_count = pick(1, std::min(4, max_size));
  const int extra = pick(0, max_size - poset.base_count);
  for (int j = 0; j < extra; ++j) {
    const int id = poset.size();
    const int kind = pick(0, 2);
    if (kind == 2 && poset.base_count >= 2) {
      const int src = pick(0, poset.base_count - 2);
      const int tgt = pick(src + 1, poset.base_count - 1);
      poset.added.push_back({AddedKind::Subdivision, -1, j, 1});
      poset.relations.emplace_back(src, id);
      poset.relations.emplace_back(id, tgt);
    } else {
      const int at = pick(0, poset.base_count - 1);
      const AddedKind k = kind == 0 ? AddedKind::End : AddedKind::Beta;
      poset.added.push_back({k, at, -1, pick(1, 2)});
      poset.relations.emplace_back(at, id);
    }
  }
  poset.sibling_groups = psifloor::group_siblings(poset.added);
  return poset;
}

// An arbitrary poset: random relations consistent with a hidden order.
inline psifloor::MarkingPoset random_dag_poset(std::mt19937_64& rng, int max_size) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  psifloor::MarkingPoset poset;
  poset.base_count = pick(0, std::min(3, max_size));
  const int n = pick(std::max(poset.base_count, 1), max_size);
  for (int j = poset.base_count; j < n; ++j) poset.added.push_back({psifloor::AddedKind::End, -1, -1, 1});
  // Base elements keep their chain order inside the hidden order.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> rank(n);
  std::vector<int> base_slots;
  for (int i = 0; i < n; ++i) {
    if (order[i] < poset.base_count) base_slots.push_back(i);
  }
  for (int b = 0; b < poset.base_count; ++b) order[base_slots[b]] = b;
  for (int i = 0; i < n; ++i) rank[order[i]] = i;
  std::bernoulli_distribution edge(0.25);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (rank[x] < rank[y] && edge(rng)) poset.relations.emplace_back(x, y);
    }
  }
  for (int j = 0; j < static_cast<int>(poset.added.size()); ++j) poset.sibling_groups.push_back({j});
  return poset;
}

}  // namespace oracle
