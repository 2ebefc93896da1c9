#pragma once

#include <chrono>
#include <map>
#include <string>
#include <vector>

#include "psifloor/recursion.hpp"
#include "psifloor/relative.hpp"

namespace psifloor {

struct FloorTotals {
  Rational value = 0;
  long diagrams = 0;  // diagrams with a non-zero contribution
  long enumerated = 0;
  long choices = 0;
};

/// N^floor_{d,k}: sum over diagrams of mu(D) sum_C mu(C) nu(D, C).
FloorTotals floor_absolute(int d, const IntSeq& k, int parallelism = 1);
Rational n_floor_absolute(int d, const IntSeq& k, int parallelism = 1);

/// N^floor_{d,k}(alpha, beta) over diagrams, compatible pairs and choices.
FloorTotals floor_relative(const InvariantKey& key, int parallelism = 1);
Rational n_floor_relative(const InvariantKey& key, int parallelism = 1);

/// One marking whose Psi-powers read `order` from left to right.
struct TraceEntry {
  PsiFloorDiagram diagram;
  EdgeChoice choice;
  std::vector<int> elements;  // marked-diagram elements, left to right
  Rational mu_diagram;
  Rational mu_choice;
  Rational contribution;  // mu(D) mu(C)
};

struct TildeTrace {
  Rational total = 0;
  std::vector<TraceEntry> entries;
};

/// Ntilde^floor_{d,k} computed with the Psi-powers in a fixed order.
/// Throws DomainError unless `order` is a rearrangement of the type k.
TildeTrace floor_tilde_trace(int d, const IntSeq& k, const std::vector<int>& order);

/// Every admissible (d, k, alpha, beta) for one degree, in a fixed order.
std::vector<InvariantKey> admissible_keys(int d);

enum class Method { Floor, Recursion, Both };
std::string to_string(Method m);
Method parse_method(const std::string& text);

struct ComputationResult {
  InvariantKey key;
  Rational value_N = 0;
  Rational value_tilde = 0;
  Method method = Method::Recursion;
  long diagram_count = 0;
  std::chrono::duration<double> elapsed{0};
  /// Both methods ran and agreed (always true for a single method).
  bool agree = true;
  Rational floor_value = 0;
  Rational recursion_value = 0;
};

struct CrosscheckReport {
  InvariantKey key;
  Rational floor;
  Rational recursion;
  bool pass = false;
  long diagrams = 0;
};

class Engine {
 public:
  explicit Engine(int parallelism = 1) : parallelism_(parallelism < 1 ? 1 : parallelism) {}

  /// Floor uses the absolute enumeration when (alpha, beta) = ((), (d)).
  ComputationResult compute(const InvariantKey& key, Method method);
  CrosscheckReport crosscheck(const InvariantKey& key);

  RecursionEngine& recursion() { return recursion_; }
  const std::map<InvariantKey, ComputationResult>& results() const { return results_; }

  /// Writes every memoized and computed value.
  void cache_save(const std::string& path) const;
  /// Merges a cache file.  Missing or empty file: no-op.  Throws
  /// ParseError on malformed content and IntegrityError on conflicts.
  void cache_load(const std::string& path);

 private:
  void remember(const ComputationResult& result);

  int parallelism_;
  RecursionEngine recursion_;
  std::map<InvariantKey, ComputationResult> results_;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace psifloor
