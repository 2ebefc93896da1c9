#pragma once

// Exact arithmetic and the sequence calculus used throughout the library.
//
// Sequences come in two flavours that must never be mixed: Psi-power types
// k = (k_0, k_1, ...) are indexed from 0, tangency sequences alpha and beta
// are indexed from 1.  The base is part of the value.

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace psifloor {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an operation's precondition on its arguments is violated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class SeqBase : int { Zero = 0, One = 1 };

/// Finitely supported sequence of non-negative integers.
///
/// Stored in canonical form (no trailing zeros), so equality and ordering are
/// structural and the type is usable as a map key.
class IntSeq {
 public:
  explicit IntSeq(SeqBase base = SeqBase::One) : base_(base) {}
  IntSeq(SeqBase base, std::vector<int> entries);

  /// The sequence with a single 1 at `index`.
  static IntSeq unit(SeqBase base, int index);

  /// Parses "2,0,1" (comma separated, empty string = zero sequence).
  static IntSeq parse(std::string_view text, SeqBase base);

  SeqBase base() const { return base_; }
  int first_index() const { return static_cast<int>(base_); }
  /// One past the largest index with a non-zero entry.
  int end_index() const { return first_index() + static_cast<int>(entries_.size()); }
  std::span<const int> entries() const { return entries_; }

  int operator[](int index) const;
  void set(int index, int value);
  void add(int index, int delta);

  bool is_zero() const { return entries_.empty(); }

  /// |s| = sum of entries.
  long size() const;
  /// I s = sum of index * entry.
  long weight() const;
  /// I^s = product of index^entry (0^0 = 1).
  Integer power_product() const;
  /// s! = product of entry!.
  Integer factorial_product() const;

  IntSeq& operator+=(const IntSeq& other);
  IntSeq& operator-=(const IntSeq& other);
  friend IntSeq operator+(IntSeq lhs, const IntSeq& rhs) { return lhs += rhs; }
  friend IntSeq operator-(IntSeq lhs, const IntSeq& rhs) { return lhs -= rhs; }

  /// Entrywise partial order.
  bool leq(const IntSeq& other) const;

  friend bool operator==(const IntSeq&, const IntSeq&) = default;
  friend auto operator<=>(const IntSeq&, const IntSeq&) = default;

  std::string to_string() const;
  std::vector<int> to_vector() const { return entries_; }

 private:
  void check_base(const IntSeq& other, const char* op) const;
  void trim();

  SeqBase base_;
  std::vector<int> entries_;
};

struct SeqNorm {
  long size = 0;
  long weight = 0;
  Integer power_product = 1;
  Integer factorial_product = 1;
};

SeqNorm seq_norm(const IntSeq& seq);

Integer factorial(long n);

/// prod_index whole! / (prod_j parts[j]! * remainder!), remainder = whole - sum(parts).
Integer multinomial(const IntSeq& whole, std::span<const IntSeq> parts);

/// Stirling number of the second kind.
Integer stirling2(int e, int g);

/// total! / prod block!, requires sum(blocks) == total.
Integer linear_ext_multinomial(long total, std::span<const long> block_sizes);

/// base^exponent with 0^0 = 1.
Integer int_pow(long base, long exponent);

/// Lowest-terms "p/q", or "n" when the denominator is one.
std::string to_string(const Rational& value);
Rational parse_rational(std::string_view text);

}  // namespace psifloor
