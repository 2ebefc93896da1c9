#include "psifloor/engine.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <thread>

namespace psifloor {

namespace {

// Runs work(i) for i in [0, n) on up to `parallelism` threads and adds the
// per-thread partial results.
template <class Work>
FloorTotals run_pool(std::size_t n, int parallelism, Work work) {
  const int workers = static_cast<int>(std::min<std::size_t>(std::max(parallelism, 1), std::max<std::size_t>(n, 1)));
  std::vector<FloorTotals> partial(workers);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto loop = [&](int w) {
    try {
      for (std::size_t i = next++; i < n; i = next++) work(i, partial[w]);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  if (workers == 1) {
    loop(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(loop, w);
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  FloorTotals total;
  for (const FloorTotals& p : partial) {
    total.value += p.value;
    total.diagrams += p.diagrams;
    total.choices += p.choices;
  }
  total.enumerated = static_cast<long>(n);
  total.value.canonicalize();
  return total;
}

void check_absolute(int d, const IntSeq& k) {
  if (k.base() != SeqBase::Zero) throw DomainError("k must be indexed from 0");
  if (d < 1) throw DomainError("degree must satisfy d >= 1");
  if (k.weight() != 3L * d - 1 - k.size()) throw DomainError("dimension condition Ik = 3d - 1 - |k| fails");
}

}  // namespace

FloorTotals floor_absolute(int d, const IntSeq& k, int parallelism) {
  check_absolute(d, k);
  const std::vector<PsiFloorDiagram> diagrams = enumerate_diagrams(d, k, DiagramKind::Absolute);
  return run_pool(diagrams.size(), parallelism, [&](std::size_t i, FloorTotals& acc) {
    const PsiFloorDiagram& D = diagrams[i];
    Rational inner = 0;
    for_each_choice(D, [&](const EdgeChoice& C) {
      ++acc.choices;
      inner += choice_multiplicity(D, C) * Rational(count_markings(D, C));
    });
    if (inner != 0) ++acc.diagrams;
    acc.value += diagram_multiplicity(D) * inner;
  });
}

Rational n_floor_absolute(int d, const IntSeq& k, int parallelism) { return floor_absolute(d, k, parallelism).value; }

FloorTotals floor_relative(const InvariantKey& key, int parallelism) {
  check_key(key);
  std::vector<PsiFloorDiagram> diagrams;
  for_each_diagram(key.d, key.k, DiagramKind::Relative, [&](const PsiFloorDiagram& D) {
    // The relative type needs 2d + |beta| - 1 - Ik - #V white vertices, i.e. |k| - #V.
    diagrams.push_back(D);
  });
  return run_pool(diagrams.size(), parallelism, [&](std::size_t i, FloorTotals& acc) {
    const PsiFloorDiagram& D = diagrams[i];
    Rational sum = 0;
    for_each_compatible_pair(D, key.alpha, key.beta, [&](const CompatiblePair& pair) {
      Rational inner = 0;
      for_each_relative_choice(D, pair, [&](const RelativeEdgeChoice& C) {
        ++acc.choices;
        inner += relative_choice_multiplicity(D, pair, C) * Rational(count_relative_markings(D, pair, C));
      });
      sum += relative_diagram_multiplicity(D, pair) * inner;
    });
    if (sum != 0) ++acc.diagrams;
    acc.value += sum;
  });
}

Rational n_floor_relative(const InvariantKey& key, int parallelism) { return floor_relative(key, parallelism).value; }

TildeTrace floor_tilde_trace(int d, const IntSeq& k, const std::vector<int>& order) {
  check_absolute(d, k);
  IntSeq seen(SeqBase::Zero);
  for (int a : order) {
    if (a < 0) throw DomainError("Psi-powers are non-negative");
    seen.add(a, 1);
  }
  if (seen != k) throw DomainError("the Psi-power order is not a rearrangement of k");
  TildeTrace trace;
  for_each_diagram(d, k, DiagramKind::Absolute, [&](const PsiFloorDiagram& D) {
    const Rational mu_d = diagram_multiplicity(D);
    for_each_choice(D, [&](const EdgeChoice& C) {
      const Rational mu_c = choice_multiplicity(D, C);
      const MarkingPoset poset = build_marking_poset(D, C);
      for_each_marking(poset, [&](const std::vector<int>& elements) {
        for (std::size_t j = 0; j < elements.size(); ++j) {
          if (poset.element_psi(D, elements[j]) != order[j]) return;
        }
        Rational contribution = mu_d * mu_c;
        trace.total += contribution;
        trace.entries.push_back({D, C, elements, mu_d, mu_c, contribution});
      });
    });
  });
  trace.total.canonicalize();
  return trace;
}

namespace {

// Sequences s (base `base`) with sum_i (i + shift) s_i == target, indices < end.
void for_each_weighted(SeqBase base, int shift, int end, int target, const std::function<void(const IntSeq&)>& fn) {
  const int first = static_cast<int>(base);
  std::vector<int> entries(std::max(end - first, 0), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i < first) {
      if (left == 0) fn(IntSeq(base, entries));
      return;
    }
    const int cost = i + shift;
    for (int x = 0; x * cost <= left; ++x) {
      entries[i - first] = x;
      rec(i - 1, left - x * cost);
      if (cost == 0) break;
    }
    entries[i - first] = 0;
  };
  rec(end - 1, target);
}

}  // namespace

std::vector<InvariantKey> admissible_keys(int d) {
  if (d < 1) throw DomainError("degree must satisfy d >= 1");
  std::vector<InvariantKey> keys;
  for_each_weighted(SeqBase::One, 0, d + 1, d, [&](const IntSeq& tangency) {
    // Split each tangency class between alpha and beta.
    std::function<void(int, IntSeq&)> split = [&](int i, IntSeq& alpha) {
      if (i == tangency.end_index()) {
        const IntSeq beta = tangency - alpha;
        // Ik + |k| = 2d - 1 + |beta|.
        const int target = 2 * d - 1 + static_cast<int>(beta.size());
        for_each_weighted(SeqBase::Zero, 1, target, target, [&](const IntSeq& k) {
          if (k.size() < 1) return;
          keys.push_back({d, k, alpha, beta});
        });
        return;
      }
      for (int x = 0; x <= tangency[i]; ++x) {
        alpha.set(i, x);
        split(i + 1, alpha);
      }
      alpha.set(i, 0);
    };
    IntSeq alpha(SeqBase::One);
    split(1, alpha);
  });
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Floor: return "floor";
    case Method::Recursion: return "recursion";
    case Method::Both: return "both";
  }
  return "unknown";
}

Method parse_method(const std::string& text) {
  if (text == "floor") return Method::Floor;
  if (text == "recursion") return Method::Recursion;
  if (text == "both") return Method::Both;
  throw DomainError("unknown method '" + text + "'");
}

namespace {

bool is_absolute_shape(const InvariantKey& key) {
  return key.alpha.is_zero() && key.beta == InvariantKey::absolute(key.d, key.k).beta;
}

}  // namespace

ComputationResult Engine::compute(const InvariantKey& key, Method method) {
  check_key(key);
  const auto start = std::chrono::steady_clock::now();
  ComputationResult r;
  r.key = key;
  r.method = method;
  if (method != Method::Recursion) {
    FloorTotals totals = is_absolute_shape(key) ? floor_absolute(key.d, key.k, parallelism_)
                                                : floor_relative(key, parallelism_);
    r.floor_value = totals.value;
    r.diagram_count = totals.diagrams;
  }
  if (method != Method::Floor) r.recursion_value = recursion_.invariant_N(key);
  r.value_N = method == Method::Floor ? r.floor_value : r.recursion_value;
  r.agree = method != Method::Both || r.floor_value == r.recursion_value;
  r.value_tilde = convert(r.value_N, key.k, key.beta, Direction::ToTilde);
  r.elapsed = std::chrono::steady_clock::now() - start;
  if (r.agree) remember(r);
  return r;
}

CrosscheckReport Engine::crosscheck(const InvariantKey& key) {
  ComputationResult r = compute(key, Method::Both);
  return {key, r.floor_value, r.recursion_value, r.agree, r.diagram_count};
}

void Engine::remember(const ComputationResult& result) {
  auto [it, fresh] = results_.emplace(result.key, result);
  if (!fresh) {
    if (it->second.value_N != result.value_N) {
      throw IntegrityError("conflicting values for " + result.key.to_string());
    }
    if (result.method == Method::Both) it->second.method = Method::Both;
  }
}

}  // namespace psifloor
