#include "psifloor/arith.hpp"

#include <charconv>
#include <numeric>

namespace psifloor {

IntSeq::IntSeq(SeqBase base, std::vector<int> entries) : base_(base), entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) throw DomainError("IntSeq entries must be non-negative");
  }
  trim();
}

IntSeq IntSeq::unit(SeqBase base, int index) {
  IntSeq s(base);
  s.set(index, 1);
  return s;
}

IntSeq IntSeq::parse(std::string_view text, SeqBase base) {
  std::vector<int> entries;
  auto is_space = [](char c) { return c == ' ' || c == '\t'; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.empty()) return IntSeq(base);
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!field.empty() && is_space(field.front())) field.remove_prefix(1);
    while (!field.empty() && is_space(field.back())) field.remove_suffix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || end != field.data() + field.size() || value < 0) {
      throw DomainError("cannot parse sequence entry '" + std::string(field) + "'");
    }
    entries.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return IntSeq(base, std::move(entries));
}

int IntSeq::operator[](int index) const {
  int offset = index - first_index();
  if (offset < 0 || offset >= static_cast<int>(entries_.size())) return 0;
  return entries_[offset];
}

void IntSeq::set(int index, int value) {
  int offset = index - first_index();
  if (offset < 0) throw DomainError("sequence index below base");
  if (value < 0) throw DomainError("IntSeq entries must be non-negative");
  if (offset >= static_cast<int>(entries_.size())) {
    if (value == 0) return;
    entries_.resize(offset + 1, 0);
  }
  entries_[offset] = value;
  trim();
}

void IntSeq::add(int index, int delta) { set(index, (*this)[index] + delta); }

long IntSeq::size() const { return std::accumulate(entries_.begin(), entries_.end(), 0L); }

long IntSeq::weight() const {
  long w = 0;
  for (std::size_t j = 0; j < entries_.size(); ++j) w += static_cast<long>(first_index() + j) * entries_[j];
  return w;
}

Integer IntSeq::power_product() const {
  Integer p = 1;
  for (std::size_t j = 0; j < entries_.size(); ++j) p *= int_pow(first_index() + static_cast<long>(j), entries_[j]);
  return p;
}

Integer IntSeq::factorial_product() const {
  Integer p = 1;
  for (int e : entries_) p *= factorial(e);
  return p;
}

void IntSeq::check_base(const IntSeq& other, const char* op) const {
  if (base_ != other.base_) throw DomainError(std::string("mixed sequence bases in ") + op);
}

IntSeq& IntSeq::operator+=(const IntSeq& other) {
  check_base(other, "addition");
  if (other.entries_.size() > entries_.size()) entries_.resize(other.entries_.size(), 0);
  for (std::size_t j = 0; j < other.entries_.size(); ++j) entries_[j] += other.entries_[j];
  trim();
  return *this;
}

IntSeq& IntSeq::operator-=(const IntSeq& other) {
  check_base(other, "subtraction");
  if (!other.leq(*this)) throw DomainError("sequence subtraction would produce a negative entry");
  for (std::size_t j = 0; j < other.entries_.size(); ++j) entries_[j] -= other.entries_[j];
  trim();
  return *this;
}

bool IntSeq::leq(const IntSeq& other) const {
  check_base(other, "comparison");
  if (entries_.size() > other.entries_.size()) return false;
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (entries_[j] > other.entries_[j]) return false;
  }
  return true;
}

std::string IntSeq::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(entries_[j]);
  }
  return out;
}

void IntSeq::trim() {
  while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

SeqNorm seq_norm(const IntSeq& seq) {
  return {seq.size(), seq.weight(), seq.power_product(), seq.factorial_product()};
}

Integer factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer multinomial(const IntSeq& whole, std::span<const IntSeq> parts) {
  IntSeq rest = whole;
  Integer denom = 1;
  for (const IntSeq& p : parts) {
    if (p.base() != whole.base()) throw DomainError("mixed sequence bases in multinomial");
    if (!p.leq(rest)) throw DomainError("multinomial parts exceed the whole");
    rest -= p;
    denom *= p.factorial_product();
  }
  denom *= rest.factorial_product();
  Integer num = whole.factorial_product();
  return num / denom;
}

Integer stirling2(int e, int g) {
  if (e < 0 || g < 0) throw DomainError("stirling2 requires non-negative arguments");
  if (g > e) return 0;
  // Row recurrence S(n, j) = j S(n-1, j) + S(n-1, j-1).
  std::vector<Integer> row(g + 1, 0);
  row[0] = 1;
  for (int n = 1; n <= e; ++n) {
    for (int j = std::min(n, g); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[g];
}

Integer linear_ext_multinomial(long total, std::span<const long> block_sizes) {
  long sum = 0;
  Integer denom = 1;
  for (long b : block_sizes) {
    if (b < 0) throw DomainError("negative block size");
    sum += b;
    denom *= factorial(b);
  }
  if (sum != total) throw DomainError("block sizes do not sum to the total");
  return factorial(total) / denom;
}

Integer int_pow(long base, long exponent) {
  if (exponent < 0) throw DomainError("negative exponent");
  if (exponent == 0) return 1;
  Integer r;
  Integer b = base;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exponent));
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) throw DomainError("cannot parse rational '" + s + "'");
  if (r.get_den() == 0) throw DomainError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace psifloor
