#include "psifloor/recursion.hpp"

#include <mutex>
#include <stdexcept>

namespace psifloor {

InvariantKey InvariantKey::absolute(int d, IntSeq k) {
  InvariantKey key;
  key.d = d;
  key.k = std::move(k);
  key.beta.set(1, d);
  return key;
}

std::string InvariantKey::to_string() const {
  return "d=" + std::to_string(d) + " k=(" + k.to_string() + ") alpha=(" + alpha.to_string() + ") beta=(" +
         beta.to_string() + ")";
}

void check_key(const InvariantKey& key) {
  if (key.k.base() != SeqBase::Zero) throw DomainError("k must be indexed from 0");
  if (key.alpha.base() != SeqBase::One || key.beta.base() != SeqBase::One) {
    throw DomainError("alpha and beta must be indexed from 1");
  }
  if (key.d < 1) throw DomainError("degree must satisfy d >= 1");
  const long tangency = key.alpha.weight() + key.beta.weight();
  if (tangency != key.d) throw DomainError("tangency condition I(alpha + beta) = d fails for " + key.to_string());
  if (tangency + key.k.weight() != 3L * key.d - 1 + key.beta.size() - key.k.size()) {
    throw DomainError("dimension condition I(alpha + beta + k) = 3d - 1 + |beta| - |k| fails for " + key.to_string());
  }
  if (key.k.size() < 1) throw DomainError("|k| >= 1 is required");
}

bool is_admissible(const InvariantKey& key) {
  try {
    check_key(key);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

Rational p1_invariant(int d_prime, int c) {
  if (d_prime < 0 || c < 0) throw DomainError("P^1 invariant needs d', c >= 0");
  Integer f = factorial(d_prime);
  Rational r(int_pow(d_prime, c), f * f);
  r.canonicalize();
  return r;
}

InvariantKey ChComponent::sub_key() const {
  InvariantKey key;
  key.d = d;
  key.k = k;
  key.alpha = alpha;
  key.beta = beta;
  if (fixed) {
    key.alpha.add(m, 1);
  } else {
    key.beta.add(m, 1);
  }
  return key;
}

namespace {

template <class Fn>
void for_each_below(const IntSeq& bound, Fn&& fn) {
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

struct TermSearch {
  const InvariantKey& key;
  const TermVisitor& visit;
  ChTerm term;

  void emit(const IntSeq& alpha_rest, const IntSeq& beta_rest, int d_rest) {
    term.alpha_rest = alpha_rest;
    term.beta_rest = beta_rest;
    term.d_rest = d_rest;
    int fixed = 0;
    for (const ChComponent& c : term.components) fixed += c.fixed;
    term.t_prime = fixed;
    const long expected = 2L * d_rest - 2 + beta_rest.size() + fixed;
    if (expected != term.a) {
      throw std::logic_error("P^1 dimension condition fails on a recursion term of " + key.to_string());
    }
    visit(term);
  }

  void run(const IntSeq& k_rest, const IntSeq& alpha_rest, const IntSeq& beta_rest, int d_rest, bool fixed_open) {
    if (k_rest.is_zero()) {
      emit(alpha_rest, beta_rest, d_rest);
      return;
    }
    for (int pass = fixed_open ? 0 : 1; pass < 2; ++pass) {
      const bool fixed = pass == 0;
      for_each_below(k_rest, [&](const IntSeq& ki) {
        if (ki.is_zero()) return;
        for_each_below(beta_rest, [&](const IntSeq& bi) {
          const long twice = ki.weight() + ki.size() + (fixed ? 1 : 0) - bi.size();
          if (twice <= 0 || twice % 2 != 0) return;
          const int di = static_cast<int>(twice / 2);
          if (di > d_rest) return;
          for_each_below(alpha_rest, [&](const IntSeq& ai) {
            const long m = di - ai.weight() - bi.weight();
            if (m <= 0) return;
            term.components.push_back({ai, bi, ki, di, static_cast<int>(m), fixed});
            run(k_rest - ki, alpha_rest - ai, beta_rest - bi, d_rest - di, fixed);
            term.components.pop_back();
          });
        });
      });
    }
  }
};

}  // namespace

void for_each_ch_term(const InvariantKey& key, int a, const TermVisitor& visit) {
  check_key(key);
  if (a < 0 || key.k[a] == 0) throw DomainError("the split-off Psi-power a needs k_a > 0");
  TermSearch search{key, visit, {}};
  search.term.a = a;
  search.run(key.k - IntSeq::unit(SeqBase::Zero, a), key.alpha, key.beta, key.d, true);
}

std::vector<ChTerm> enumerate_ch_terms(const InvariantKey& key, int a) {
  std::vector<ChTerm> out;
  for_each_ch_term(key, a, [&](const ChTerm& t) { out.push_back(t); });
  return out;
}

Rational convert(const Rational& value, const IntSeq& k, const IntSeq& beta, Direction direction) {
  Rational factor(beta.factorial_product() * k.factorial_product(), factorial(k.size()));
  factor.canonicalize();
  Rational r = direction == Direction::ToTilde ? Rational(value * factor) : Rational(value / factor);
  r.canonicalize();
  return r;
}

bool RecursionEngine::lookup(const InvariantKey& key, Rational& out) const {
  if (!memoize_) return false;
  std::shared_lock lock(mutex_);
  auto it = memo_.find(key);
  if (it == memo_.end()) return false;
  out = it->second;
  return true;
}

void RecursionEngine::store(const InvariantKey& key, const Rational& value) {
  if (!memoize_) return;
  std::unique_lock lock(mutex_);
  memo_.emplace(key, value);
}

Rational RecursionEngine::invariant_N(const InvariantKey& key) {
  Rational cached;
  if (lookup(key, cached)) return cached;
  check_key(key);
  ++evaluations_;
  const long total = key.k.size();
  Rational sum = 0;
  for (int a = key.k.first_index(); a < key.k.end_index(); ++a) {
    if (key.k[a] == 0) continue;
    for_each_ch_term(key, a, [&](const ChTerm& term) {
      const int t = term.t();
      const int c = static_cast<int>(term.alpha_rest.size()) + t - term.t_prime;
      if (term.d_rest == 0 && c > 0) return;
      Rational value = p1_invariant(term.d_rest, c);
      Integer num = 1;
      std::vector<IntSeq> alphas;
      std::vector<long> sizes;
      for (const ChComponent& comp : term.components) {
        num *= comp.m;
        alphas.push_back(comp.alpha);
        sizes.push_back(comp.k.size());
      }
      value *= num;
      value /= factorial(term.t_prime) * factorial(t - term.t_prime);
      value *= multinomial(key.alpha, alphas);
      value /= term.beta_rest.factorial_product();
      value *= linear_ext_multinomial(total - 1, sizes);
      for (const ChComponent& comp : term.components) {
        const InvariantKey sub = comp.sub_key();
        if (sub.k.size() >= total) throw std::logic_error("recursion did not decrease |k|");
        value *= invariant_N(sub);
        if (!comp.fixed) value *= comp.beta[comp.m] + 1;
      }
      sum += value;
    });
  }
  sum.canonicalize();
  store(key, sum);
  return sum;
}

Rational RecursionEngine::invariant_tilde(const InvariantKey& key, int a) {
  check_key(key);
  if (a < 0 || key.k[a] == 0) throw DomainError("the split-off Psi-power a needs k_a > 0");
  if (memoize_) {
    std::shared_lock lock(mutex_);
    auto it = tilde_memo_.find({key, a});
    if (it != tilde_memo_.end()) return it->second;
  }
  ++evaluations_;
  const IntSeq rest = key.k - IntSeq::unit(SeqBase::Zero, a);
  Rational sum = 0;
  for_each_ch_term(key, a, [&](const ChTerm& term) {
    const int t = term.t();
    const int c = static_cast<int>(term.alpha_rest.size()) + t - term.t_prime;
    if (term.d_rest == 0 && c > 0) return;
    Rational value = p1_invariant(term.d_rest, c);
    Integer num = 1;
    std::vector<IntSeq> alphas, betas, ks;
    for (const ChComponent& comp : term.components) {
      num *= comp.m;
      alphas.push_back(comp.alpha);
      betas.push_back(comp.beta);
      ks.push_back(comp.k);
    }
    value *= num;
    value /= factorial(term.t_prime) * factorial(t - term.t_prime);
    value *= multinomial(key.alpha, alphas);
    value *= multinomial(key.beta, betas);
    value *= multinomial(rest, ks);
    for (const ChComponent& comp : term.components) value *= invariant_tilde(comp.sub_key());
    sum += value;
  });
  sum.canonicalize();
  if (memoize_) {
    std::unique_lock lock(mutex_);
    tilde_memo_.emplace(std::pair(key, a), sum);
  }
  return sum;
}

Rational RecursionEngine::invariant_tilde(const InvariantKey& key) {
  check_key(key);
  int a = key.k.first_index();
  while (key.k[a] == 0) ++a;
  return invariant_tilde(key, a);
}

std::map<InvariantKey, Rational> RecursionEngine::snapshot() const {
  std::shared_lock lock(mutex_);
  return memo_;
}

void RecursionEngine::seed(const InvariantKey& key, const Rational& value) {
  check_key(key);
  std::unique_lock lock(mutex_);
  auto [it, fresh] = memo_.emplace(key, value);
  if (!fresh && it->second != value) {
    throw IntegrityError("conflicting cached value for " + key.to_string() + ": " + to_string(it->second) + " vs " +
                         to_string(value));
  }
}

std::size_t RecursionEngine::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

}  // namespace psifloor
