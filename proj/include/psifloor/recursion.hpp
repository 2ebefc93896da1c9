#pragma once

#include <atomic>
#include <functional>
#include <map>
#include <shared_mutex>
#include <string>
#include <vector>

#include "psifloor/arith.hpp"

namespace psifloor {

struct InvariantKey {
  int d = 0;
  IntSeq k{SeqBase::Zero};
  IntSeq alpha{SeqBase::One};
  IntSeq beta{SeqBase::One};

  /// The absolute key (d, k, (), (d)).
  static InvariantKey absolute(int d, IntSeq k);

  std::string to_string() const;
  friend bool operator==(const InvariantKey&, const InvariantKey&) = default;
  friend auto operator<=>(const InvariantKey&, const InvariantKey&) = default;
};

/// Throws DomainError naming the violated condition.
void check_key(const InvariantKey& key);
bool is_admissible(const InvariantKey& key);

/// <1..1 h..h tau^a(h)>_{d'} on P^1 = d'^c / d'!^2 (0^0 = 1).
Rational p1_invariant(int d_prime, int c);

struct ChComponent {
  IntSeq alpha{SeqBase::One};
  IntSeq beta{SeqBase::One};
  IntSeq k{SeqBase::Zero};
  int d = 0;
  int m = 0;
  bool fixed = false;  // first t' components: the new end is fixed (alpha + e_m)

  /// The key of the recursive invariant this component contributes.
  InvariantKey sub_key() const;
};

struct ChTerm {
  int a = 0;
  int t_prime = 0;
  std::vector<ChComponent> components;  // fixed ones first
  IntSeq alpha_rest{SeqBase::One};
  IntSeq beta_rest{SeqBase::One};
  int d_rest = 0;

  int t() const { return static_cast<int>(components.size()); }
};

using TermVisitor = std::function<void(const ChTerm&)>;

/// Every ordered component tuple for the chosen Psi-power a exactly once.
/// Throws DomainError if k_a = 0 and std::logic_error if a generated term
/// breaks the P^1 dimension condition a = 2d' - 2 + |beta'| + t'.
void for_each_ch_term(const InvariantKey& key, int a, const TermVisitor& visit);
std::vector<ChTerm> enumerate_ch_terms(const InvariantKey& key, int a);

enum class Direction { ToTilde, ToN };

/// Ntilde = beta! k! / |k|! * N and back.
Rational convert(const Rational& value, const IntSeq& k, const IntSeq& beta, Direction direction);

/// Memoized evaluation of the recursion.  Lookups take a shared lock and
/// insertions an exclusive one, so one engine may serve many threads.
class RecursionEngine {
 public:
  explicit RecursionEngine(bool memoize = true) : memoize_(memoize) {}

  /// N_{d,k}(alpha, beta) by the N-form of the recursion.
  Rational invariant_N(const InvariantKey& key);
  /// Ntilde_{d,k}(alpha, beta) splitting off the point with Psi-power a.
  Rational invariant_tilde(const InvariantKey& key, int a);
  /// Same with the smallest admissible a.
  Rational invariant_tilde(const InvariantKey& key);

  std::map<InvariantKey, Rational> snapshot() const;
  /// Inserts a known value; throws IntegrityError on conflict.
  void seed(const InvariantKey& key, const Rational& value);
  std::size_t memo_size() const;
  long evaluations() const { return evaluations_.load(); }

 private:
  bool lookup(const InvariantKey& key, Rational& out) const;
  void store(const InvariantKey& key, const Rational& value);

  bool memoize_;
  mutable std::shared_mutex mutex_;
  std::map<InvariantKey, Rational> memo_;
  std::map<std::pair<InvariantKey, int>, Rational> tilde_memo_;
  std::atomic<long> evaluations_{0};
};

/// Conflicting values for one key.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace psifloor
