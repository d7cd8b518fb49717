#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bijlab/bijections.hpp"
#include "bijlab/budget.hpp"
#include "bijlab/errors.hpp"
#include "bijlab/exact_int.hpp"
#include "bijlab/exactmath.hpp"
#include "bijlab/radix_word.hpp"

namespace bijlab {

/// A tuple of named non-negative integer parameters, drawn from n, m, p, k.
class Params {
 public:
  Params() = default;
  Params(std::initializer_list<std::pair<const char, std::int64_t>> init) : values_(init) {}

  [[nodiscard]] std::int64_t operator[](char name) const {
    auto it = values_.find(name);
    if (it == values_.end()) {
      throw parameter_error(std::string("missing parameter ") + name);
    }
    return it->second;
  }
  [[nodiscard]] bool has(char name) const { return values_.contains(name); }
  void set(char name, std::int64_t value) { values_[name] = value; }
  [[nodiscard]] const std::map<char, std::int64_t>& values() const { return values_; }

  /// "n=3 k=2", in the given order.
  [[nodiscard]] std::string to_string(const std::vector<char>& order) const {
    std::string out;
    for (char c : order) {
      if (!has(c)) continue;
      if (!out.empty()) out.push_back(' ');
      out += std::string(1, c) + "=" + std::to_string((*this)[c]);
    }
    return out;
  }

  friend bool operator==(const Params&, const Params&) = default;

 private:
  std::map<char, std::int64_t> values_;
};

/// Sub-domain on which the brute-force recounts run.
struct OracleLimits {
  std::size_t binary_width = 22;
  std::size_t ternary_width = 14;
  std::size_t permutation_n = 9;
  std::uint64_t divisor_scan = 1'000'000;

  /// Words of a base other than 2 or 3 are allowed up to the ternary word count.
  [[nodiscard]] bool admits_words(std::int64_t base, std::int64_t width) const {
    if (width < 0) return false;
    if (base == 2) return static_cast<std::size_t>(width) <= binary_width;
    if (base == 3) return static_cast<std::size_t>(width) <= ternary_width;
    return word_count(static_cast<Digit>(base), static_cast<std::size_t>(width)) <=
           word_count(3, ternary_width);
  }
};

struct VerifyOptions {
  OracleLimits limits;
  EnumBudget budget;
};

using Evaluator = std::function<ExactInt(const Params&, const EnumBudget&)>;

struct Constraint {
  std::string text;
  std::function<bool(const Params&)> holds;
};

struct Oracle {
  std::string kind;
  /// Human-readable admissible sub-domain, e.g. "2n <= binary width".
  std::string subdomain;
  std::function<bool(const Params&, const OracleLimits&)> admissible;
  Evaluator count;
  /// True for recounts that re-evaluate the left side with every binomial
  /// replaced by a word count, as opposed to a dedicated double count.
  bool generic = false;
};

struct IdentityDescriptor {
  std::string id;
  std::string statement;
  /// Non-empty when the implemented form differs from the printed one.
  std::string note;
  std::vector<char> parameter_names;
  std::vector<Constraint> domain;
  Evaluator lhs;
  Evaluator rhs;
  /// Further closed forms that must equal lhs (three-way identities).
  std::vector<Evaluator> alternates;
  std::optional<Oracle> oracle;

  [[nodiscard]] std::string domain_text() const {
    std::string out;
    for (const auto& c : domain) {
      if (!out.empty()) out += ", ";
      out += c.text;
    }
    return out.empty() ? "all parameters >= 0" : out;
  }

  /// Description of the first violated constraint, if any.
  [[nodiscard]] std::optional<std::string> domain_violation(const Params& params) const {
    for (char c : parameter_names) {
      if (!params.has(c)) return std::string("missing parameter ") + c;
      if (params[c] < 0) return std::string(1, c) + " >= 0";
    }
    for (const auto& [name, value] : params.values()) {
      if (std::ranges::find(parameter_names, name) == parameter_names.end()) {
        return std::string("no parameter named ") + name;
      }
    }
    for (const auto& c : domain) {
      if (!c.holds(params)) return c.text;
    }
    return std::nullopt;
  }
};

enum class Verdict { pass, fail, oracle_skipped };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::oracle_skipped: return "ORACLE-SKIPPED";
  }
  return "?";
}

struct VerificationReport {
  std::string identity;
  std::vector<char> parameter_names;
  Params params;
  ExactInt lhs;
  ExactInt rhs;
  std::vector<ExactInt> alternates;
  std::optional<ExactInt> oracle;
  Verdict verdict = Verdict::fail;
};

// ---------------------------------------------------------------------------
// Double-count oracles. Each one enumerates words and counts a set whose size
// is one side of an identity, without touching the closed forms.

namespace oracles {

inline std::size_t width_of(std::int64_t w) { return static_cast<std::size_t>(w); }

template <typename Pred>
ExactInt count_words(Digit base, std::size_t width, const EnumBudget& budget, Pred&& pred) {
  std::uint64_t hits = 0;
  for_each_word(base, width, budget, [&](const WordOdometer& w) {
    if (pred(w)) ++hits;
  });
  return ExactInt(hits);
}

/// n-digit binary words with exactly p ones, split by last digit:
/// {ending in 0, ending in 1}.
inline std::pair<ExactInt, ExactInt> last_digit_split(std::int64_t n, std::int64_t p,
                                                      const EnumBudget& budget) {
  std::uint64_t ends0 = 0;
  std::uint64_t ends1 = 0;
  for_each_word(2, width_of(n), budget, [&](const WordOdometer& w) {
    if (static_cast<std::int64_t>(w.frequency(1)) != p) return;
    if (w.digits().back() == 0) ++ends0; else ++ends1;
  });
  return {ExactInt(ends0), ExactInt(ends1)};
}

/// (n+m)-digit binary words with p ones, bucketed by how many of the ones sit
/// in the first n positions. Entry k is the size of bucket k.
inline std::vector<ExactInt> vandermonde_buckets(std::int64_t n, std::int64_t m, std::int64_t p,
                                                 const EnumBudget& budget) {
  std::vector<std::uint64_t> buckets(width_of(std::max<std::int64_t>(p, 0)) + 1, 0);
  for_each_word(2, width_of(n + m), budget, [&](const WordOdometer& w) {
    if (static_cast<std::int64_t>(w.frequency(1)) != p) return;
    ++buckets[w.prefix_frequency(1, width_of(n))];
  });
  return {buckets.begin(), buckets.end()};
}

/// n-digit ternary words with exactly m twos, bucketed by the number of
/// nonzero digits. Entry k is the size of bucket k.
inline std::vector<ExactInt> ternary_twos_by_nonzero(std::int64_t n, std::int64_t m,
                                                     const EnumBudget& budget) {
  std::vector<std::uint64_t> buckets(width_of(n) + 1, 0);
  for_each_word(3, width_of(n), budget, [&](const WordOdometer& w) {
    if (static_cast<std::int64_t>(w.frequency(2)) != m) return;
    ++buckets[w.width() - w.frequency(0)];
  });
  return {buckets.begin(), buckets.end()};
}

/// Number of x in [1, N] dividing N = (product of the first n primes)^p.
inline ExactInt divisor_scan(std::int64_t n, std::int64_t p, const EnumBudget& budget) {
  ExactInt a{1};
  for (auto q : first_primes(width_of(n))) a *= ExactInt(q);
  const ExactInt target = power(a, static_cast<std::uint64_t>(p));
  require_budget(target, budget, "divisor scan of " + target.str());
  const std::uint64_t value = target.to_u64();
  std::uint64_t divisors = 0;
  for (std::uint64_t x = 1; x <= value; ++x) {
    if (value % x == 0) ++divisors;
  }
  return ExactInt(divisors);
}

/// Binomials recounted as numbers of binary words with a given number of
/// ones. One enumeration per width, cached for the lifetime of the object.
class BinomialRecount {
 public:
  explicit BinomialRecount(const EnumBudget& budget) : budget_(budget) {}

  ExactInt operator()(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return ExactInt{0};
    auto [it, inserted] = rows_.try_emplace(n);
    if (inserted) {
      it->second.assign(width_of(n) + 1, 0);
      for_each_word(2, width_of(n), budget_,
                    [&](const WordOdometer& w) { ++it->second[w.frequency(1)]; });
    }
    return ExactInt(it->second[width_of(k)]);
  }

 private:
  EnumBudget budget_;
  std::map<std::int64_t, std::vector<std::uint64_t>> rows_;
};

}  // namespace oracles

// ---------------------------------------------------------------------------
// Registry

namespace detail {

using Binom = std::function<ExactInt(std::int64_t, std::int64_t)>;
using Formula = std::function<ExactInt(const Params&, const Binom&)>;

inline const Binom& closed_binomial() {
  static const Binom b = [](std::int64_t n, std::int64_t k) { return binomial(n, k); };
  return b;
}

inline ExactInt pow_of(std::int64_t base, std::int64_t exp) {
  return power(ExactInt(base), static_cast<std::uint64_t>(exp));
}

inline Evaluator closed(Formula f) {
  return [f = std::move(f)](const Params& q, const EnumBudget&) { return f(q, closed_binomial()); };
}

inline Evaluator simple(std::function<ExactInt(const Params&)> f) {
  return [f = std::move(f)](const Params& q, const EnumBudget&) { return f(q); };
}

/// Oracle that re-evaluates `formula` with enumerated binomials.
inline Oracle generic_recount(Formula formula, std::string subdomain,
                              std::function<std::int64_t(const Params&)> widest) {
  Oracle o;
  o.kind = "generic recount (enumerated binomials)";
  o.subdomain = std::move(subdomain);
  o.admissible = [widest = std::move(widest)](const Params& q, const OracleLimits& lim) {
    return lim.admits_words(2, widest(q));
  };
  o.count = [formula = std::move(formula)](const Params& q, const EnumBudget& budget) {
    oracles::BinomialRecount recount(budget);
    Binom b = [&recount](std::int64_t n, std::int64_t k) { return recount(n, k); };
    return formula(q, b);
  };
  o.generic = true;
  return o;
}

inline Constraint at_least(char name, std::int64_t bound) {
  return {std::string(1, name) + " >= " + std::to_string(bound),
          [name, bound](const Params& q) { return q[name] >= bound; }};
}

inline Constraint leq(char a, char b) {
  return {std::string(1, a) + " <= " + std::string(1, b),
          [a, b](const Params& q) { return q[a] <= q[b]; }};
}

inline std::size_t w(std::int64_t v) { return static_cast<std::size_t>(v); }

// Sum_{k=0..n} C(n,k) (p-1)^(n-k)
inline ExactInt weighted_row_sum(const Params& q, const Binom& C) {
  const auto n = q['n'];
  const auto p = q['p'];
  ExactInt s{0};
  for (std::int64_t k = 0; k <= n; ++k) s += C(n, k) * pow_of(p - 1, n - k);
  return s;
}

// Sum_{j=0..n} C(k+j, j)
inline ExactInt hockey_stick_sum(const Params& q, const Binom& C) {
  ExactInt s{0};
  for (std::int64_t j = 0; j <= q['n']; ++j) s += C(q['k'] + j, j);
  return s;
}

inline ExactInt hockey_stick_sum_printed(const Params& q, const Binom& C) {
  ExactInt s{0};
  for (std::int64_t j = 0; j <= q['n']; ++j) s += ExactInt(q['k']) * C(q['k'] + j, j);
  return s;
}

inline std::vector<IdentityDescriptor> build_registry() {
  std::vector<IdentityDescriptor> r;

  {
    IdentityDescriptor d;
    d.id = "SYM";
    d.statement = "C(n,k) = C(n,n-k)";
    d.parameter_names = {'n', 'k'};
    d.domain = {leq('k', 'n')};
    d.lhs = closed([](const Params& q, const Binom& C) { return C(q['n'], q['k']); });
    d.rhs = closed([](const Params& q, const Binom& C) { return C(q['n'], q['n'] - q['k']); });
    d.oracle = Oracle{"binary-word enumeration (words with k zeros)", "n <= binary width",
                      [](const Params& q, const OracleLimits& l) { return l.admits_words(2, q['n']); },
                      [](const Params& q, const EnumBudget& b) {
                        return oracles::count_words(2, w(q['n']), b, [&](const WordOdometer& x) {
                          return static_cast<std::int64_t>(x.frequency(0)) == q['k'];
                        });
                      }};
    r.push_back(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "P1";
    d.statement = "sum_{k=0..n} C(n,k) = 2^n";
    d.parameter_names = {'n'};
    d.lhs = closed([](const Params& q, const Binom& C) {
      ExactInt s{0};
      for (std::int64_t k = 0; k <= q['n']; ++k) s += C(q['n'], k);
      return s;
    });
    d.rhs = simple([](const Params& q) { return pow_of(2, q['n']); });
    d.oracle = Oracle{"binary-word enumeration (subset codes)", "n <= binary width",
                      [](const Params& q, const OracleLimits& l) { return l.admits_words(2, q['n']); },
                      [](const Params& q, const EnumBudget& b) {
                        return oracles::count_words(2, w(q['n']), b,
                                                    [](const WordOdometer&) { return true; });
                      }};
    r.push_back(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "P2";
    d.statement = "sum_{k=0..n} [n|k]_{p,m} = p^n  (m is the colour index)";
    d.parameter_names = {'n', 'p', 'm'};
    d.domain = {at_least('p', 2), {"m <= p-1", [](const Params& q) { return q['m'] <= q['p'] - 1; }}};
    d.lhs = simple([](const Params& q) {
      ExactInt s{0};
      for (std::int64_t k = 0; k <= q['n']; ++k) {
        s += coloring_count(q['n'], static_cast<Digit>(q['p']), static_cast<Digit>(q['m']), k);
      }
      return s;
    });
    d.rhs = simple([](const Params& q) { return pow_of(q['p'], q['n']); });
    d.oracle = Oracle{"p-ary word enumeration (colourings by colour-m frequency)",
                      "p^n <= ternary word count",
                      [](const Params& q, const OracleLimits& l) { return l.admits_words(q['p'], q['n']); },
                      [](const Params& q, const EnumBudget& b) {
                        std::vector<std::uint64_t> buckets(w(q['n']) + 1, 0);
                        const auto colour = static_cast<Digit>(q['m']);
                        for_each_word(static_cast<Digit>(q['p']), w(q['n']), b,
                                      [&](const WordOdometer& x) { ++buckets[x.frequency(colour)]; });
                        ExactInt s{0};
                        for (auto v : buckets) s += ExactInt(v);
                        return s;
                      }};
    r.push_back(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "P5";
    d.statement = "#{(x,y) : x*y = a^p} = (p+1)^n  (a = product of the first n primes)";
    d.parameter_names = {'n', 'p'};
    d.domain = {at_least('p', 1)};
    // Divisor count of a^p read off its factorisation: product of (e+1).
    d.lhs = simple([](const Params& q) {
      const auto primes = first_primes(w(q['n']));
      ExactInt a{1};
      for (auto prime : primes) a *= ExactInt(prime);
      ExactInt rest = power(a, static_cast<std::uint64_t>(q['p']));
      ExactInt divisors{1};
      for (auto prime : primes) {
        std::uint64_t e = 0;
        while (rest.divisible_by(ExactInt(prime))) {
          rest = divide_exact(rest, ExactInt(prime));
          ++e;
        }
        divisors *= ExactInt(e + 1);
      }
      return divisors;
    });
    d.rhs = simple([](const Params& q) { return count_xy_solutions(w(q['n']), static_cast<std::uint32_t>(q['p'])); });
    d.oracle = Oracle{"divisor scan", "a^p <= divisor scan limit",
                      [](const Params& q, const OracleLimits& l) {
                        ExactInt a{1};
                        for (auto prime : first_primes(w(q['n']))) a *= ExactInt(prime);
                        return power(a, static_cast<std::uint64_t>(q['p'])) <= ExactInt(l.divisor_scan);
                      },
                      [](const Params& q, const EnumBudget& b) {
                        return oracles::divisor_scan(q['n'], q['p'], b);
                      }};
    r.push_back(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "P7";
    d.statement = "sum_{k=0..n} k*p_n(k) = n!  (p_n(k) counted by enumeration)";
    d.parameter_names = {'n'};
    d.domain = {at_least('n', 1)};
    d.lhs = [](const Params& q, const EnumBudget& b) {
      const auto profile = fixed_point_profile(w(q['n']), b);
      ExactInt s{0};
      for (std::size_t k = 0; k < profile.size(); ++k) s += ExactInt(k) * profile[k];
      return s;
    };
    d.rhs = simple([](const Params& q) { return factorial(q['n']); });
    d.oracle = Oracle{"permutation enumeration (fixed-point mask column sums)",
                      "n <= permutation limit",
                      [](const Params& q, const OracleLimits& l) { return w(q['n']) <= l.permutation_n; },
                      [](const Params& q, const EnumBudget& b) {
                        ExactInt s{0};
                        for (const auto& c : fixed_point_columns(w(q['n']), b)) s += c;
                        return s;
                      }};
    r.push_back(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "A8a";
    d.statement = "C(n,p) = C(n-1,p) + C(n-1,p-1)";
    d.parameter_names = {'n', 'p'};
    d.domain = {at_least('n', 1), leq('p', 'n')};
    d.lhs = closed([](const Params& q, const Binom& C) { return C(q['n'], q['p']); });
    d.rhs = closed([](const Params& q, const Binom& C) {
      return C(q['n'] - 1, q['p']) + C(q['n'] - 1, q['p'] - 1);
    });
    d.oracle = Oracle{"binary-word enumeration (split by last digit)", "n <= binary width",
                      [](const Params& q, const OracleLimits& l) { return l.admits_words(2, q['n']); },
                      [](const Params& q, const EnumBudget& b) {
                        auto [ends0, ends1] = oracles::last_digit_split(q['n'], q['p'], b);
                        return ends0 + ends1;
                      }};
    r.push_back(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "A8b";
    d.statement = "C(n-p,m-p) = C(n-p,n-m)";
    d.parameter_names = {'n', 'm', 'p'};
    d.domain = {leq('p', 'm'), leq('m', 'n')};
    d.lhs = closed([](const Params& q, const Binom& C) { return C(q['n'] - q['p'], q['m'] - q['p']); });
    d.rhs = closed([](const Params& q, const Binom& C) { return C(q['n'] - q['p'], q['n'] - q['m']); });
    d.oracle = Oracle{"binary-word enumeration (words with n-m zeros)", "n-p <= binary width",
                      [](const Params& q, const OracleLimits& l) { return l.admits_words(2, q['n'] - q['p']); },
                      [](const Params& q, const EnumBudget& b) {
                        return oracles::count_words(2, w(q['n'] - q['p']), b, [&](const WordOdometer& x) {
                          return static_cast<std::int64_t>(x.frequency(0)) == q['n'] - q['m'];
                        });
                      }};
    r.push_back(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "A8c";
    d.statement = "C(n+p,n-m) = C(n+p,m+p)";
    d.parameter_names = {'n', 'm', 'p'};
    d.domain = {leq('m', 'n')};
    d.lhs = closed([](const Params& q, const Binom& C) { return C(q['n'] + q['p'], q['n'] - q['m']); });
    d.rhs = closed([](const Params& q, const Binom& C) { return C(q['n'] + q['p'], q['m'] + q['p']); });
    d.oracle = Oracle{"binary-word enumeration (words with n-m zeros)", "n+p <= binary width",
                      [](const Params& q, const OracleLimits& l) { return l.admits_words(2, q['n'] + q['p']); },
                      [](const Params& q, const EnumBudget& b) {
                        return oracles::count_words(2, w(q['n'] + q['p']), b, [&](const WordOdometer& x) {
                          return static_cast<std::int64_t>(x.frequency(0)) == q['n'] - q['m'];
                        });
                      }};
    r.push_back(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "A8d";
    d.statement = "C(n+m,p) = sum_{k=0..p} C(n,k)*C(m,p-k)";
    d.parameter_names = {'n', 'm', 'p'};
    d.lhs = closed([](const Params& q, const Binom& C) { return C(q['n'] + q['m'], q['p']); });
    d.rhs = closed([](const Params& q, const Binom& C) {
      ExactInt s{0};
      for (std::int64_t k = 0; k <= q['p']; ++k) s += C(q['n'], k) * C(q['m'], q['p'] - k);
      return s;
    });
    d.oracle = Oracle{"binary-word enumeration (bucketed by ones in first n positions)",
                      "n+m <= binary width",
                      [](const Params& q, const OracleLimits& l) { return l.admits_words(2, q['n'] + q['m']); },
                      [](const Params& q, const EnumBudget& b) {
                        ExactInt s{0};
                        for (const auto& v : oracles::vandermonde_buckets(q['n'], q['m'], q['p'], b)) s += v;
                        return s;
                      }};
    r.push_back(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "A8e";
    d.statement = "C(2n,n) = sum_{k=0..n} C(n,k)^2";
    d.parameter_names = {'n'};
    d.lhs = closed([](const Params& q, const Binom& C) { return C(2 * q['n'], q['n']); });
    d.rhs = closed([](const Params& q, const Binom& C) {
      ExactInt s{0};
      for (std::int64_t k = 0; k <= q['n']; ++k) s += C(q['n'], k) * C(q['n'], k);
      return s;
    });
    d.oracle = Oracle{"binary-word enumeration (bucketed by ones in first n positions)",
                      "2n <= binary width",
                      [](const Params& q, const OracleLimits& l) { return l.admits_words(2, 2 * q['n']); },
                      [](const Params& q, const EnumBudget& b) {
                        ExactInt s{0};
                        for (const auto& v : oracles::vandermonde_buckets(q['n'], q['n'], q['n'], b)) s += v;
                        return s;
                      }};
    r.push_back(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "A8f";
    d.statement = "C(n,m)*C(n-m,p) = C(n,p)*C(n-p,m) = C(n,m+p)*C(m+p,m)";
    d.parameter_names = {'n', 'm', 'p'};
    d.domain = {{"m+p <= n", [](const Params& q) { return q['m'] + q['p'] <= q['n']; }}};
    d.lhs = closed([](const Params& q, const Binom& C) { return C(q['n'], q['m']) * C(q['n'] - q['m'], q['p']); });
    d.rhs = closed([](const Params& q, const Binom& C) { return C(q['n'], q['p']) * C(q['n'] - q['p'], q['m']); });
    d.alternates = {closed([](const Params& q, const Binom& C) {
      return C(q['n'], q['m'] + q['p']) * C(q['m'] + q['p'], q['m']);
    })};
    d.oracle = Oracle{"ternary-word enumeration (m twos, p ones)", "n <= ternary width",
                      [](const Params& q, const OracleLimits& l) { return l.admits_words(3, q['n']); },
                      [](const Params& q, const EnumBudget& b) {
                        return oracles::count_words(3, w(q['n']), b, [&](const WordOdometer& x) {
                          return static_cast<std::int64_t>(x.frequency(2)) == q['m'] &&
                                 static_cast<std::int64_t>(x.frequency(1)) == q['p'];
                        });
                      }};
    r.push_back(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "A8g";
    d.statement = "C(n,m)*C(m,p) = C(n,p)*C(n-p,m-p) = C(n,m-p)*C(n-m+p,p)";
    d.parameter_names = {'n', 'm', 'p'};
    d.domain = {leq('p', 'm'), leq('m', 'n')};
    d.lhs = closed([](const Params& q, const Binom& C) { return C(q['n'], q['m']) * C(q['m'], q['p']); });
    d.rhs = closed([](const Params& q, const Binom& C) {
      return C(q['n'], q['p']) * C(q['n'] - q['p'], q['m'] - q['p']);
    });
    d.alternates = {closed([](const Params& q, const Binom& C) {
      return C(q['n'], q['m'] - q['p']) * C(q['n'] - q['m'] + q['p'], q['p']);
    })};
    d.oracle = Oracle{"ternary-word enumeration (p twos, m-p ones)", "n <= ternary width",
                      [](const Params& q, const OracleLimits& l) { return l.admits_words(3, q['n']); },
                      [](const Params& q, const EnumBudget& b) {
                        return oracles::count_words(3, w(q['n']), b, [&](const WordOdometer& x) {
                          return static_cast<std::int64_t>(x.frequency(2)) == q['p'] &&
                                 static_cast<std::int64_t>(x.frequency(1)) == q['m'] - q['p'];
                        });
                      }};
    r.push_back(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "A8h";
    d.statement = "[n|k]_{p,m} = C(n,k)*(p-1)^(n-k)  (m is the colour index)";
    d.parameter_names = {'n', 'k', 'p', 'm'};
    d.domain = {leq('k', 'n'), at_least('p', 2),
                {"m <= p-1", [](const Params& q) { return q['m'] <= q['p'] - 1; }}};
    d.lhs = simple([](const Params& q) {
      return coloring_count(q['n'], static_cast<Digit>(q['p']), static_cast<Digit>(q['m']), q['k']);
    });
    d.rhs = closed([](const Params& q, const Binom& C) {
      return C(q['n'], q['k']) * pow_of(q['p'] - 1, q['n'] - q['k']);
    });
    d.oracle = Oracle{"p-ary word enumeration (words with k digits m)", "p^n <= ternary word count",
                      [](const Params& q, const OracleLimits& l) { return l.admits_words(q['p'], q['n']); },
                      [](const Params& q, const EnumBudget& b) {
                        return count_by_frequency(static_cast<Digit>(q['p']), w(q['n']),
                                                  static_cast<Digit>(q['m']), w(q['k']), b);
                      }};
    r.push_back(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "A8i";
    d.statement = "sum_{k=0..n} C(n,k)*(p-1)^(n-k) = p^n";
    d.note = "corrected from printed form: right side printed as p^k";
    d.parameter_names = {'n', 'p'};
    d.domain = {at_least('p', 1)};
    d.lhs = closed(weighted_row_sum);
    d.rhs = simple([](const Params& q) { return pow_of(q['p'], q['n']); });
    d.oracle = generic_recount(weighted_row_sum, "n <= binary width",
                               [](const Params& q) { return q['n']; });
    r.push_back(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "A8j";
    d.statement = "sum_{k=m..n} C(n,k)*C(k,m) = 2^(n-m)*C(n,m)";
    d.parameter_names = {'n', 'm'};
    d.domain = {leq('m', 'n')};
    d.lhs = closed([](const Params& q, const Binom& C) {
      ExactInt s{0};
      for (std::int64_t k = q['m']; k <= q['n']; ++k) s += C(q['n'], k) * C(k, q['m']);
      return s;
    });
    d.rhs = closed([](const Params& q, const Binom& C) {
      return pow_of(2, q['n'] - q['m']) * C(q['n'], q['m']);
    });
    d.oracle = Oracle{"ternary-word enumeration (m twos, bucketed by nonzero digits)",
                      "n <= ternary width",
                      [](const Params& q, const OracleLimits& l) { return l.admits_words(3, q['n']); },
                      [](const Params& q, const EnumBudget& b) {
                        ExactInt s{0};
                        for (const auto& v : oracles::ternary_twos_by_nonzero(q['n'], q['m'], b)) s += v;
                        return s;
                      }};
    r.push_back(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "A8k";
    d.statement = "sum_{k=0..n} C(2n+1,k) = 2^(2n)";
    d.parameter_names = {'n'};
    d.lhs = closed([](const Params& q, const Binom& C) {
      ExactInt s{0};
      for (std::int64_t k = 0; k <= q['n']; ++k) s += C(2 * q['n'] + 1, k);
      return s;
    });
    d.rhs = simple([](const Params& q) { return pow_of(2, 2 * q['n']); });
    d.oracle = Oracle{"binary-word enumeration (words with at most n ones)", "2n+1 <= binary width",
                      [](const Params& q, const OracleLimits& l) { return l.admits_words(2, 2 * q['n'] + 1); },
                      [](const Params& q, const EnumBudget& b) {
                        return oracles::count_words(2, w(2 * q['n'] + 1), b, [&](const WordOdometer& x) {
                          return static_cast<std::int64_t>(x.frequency(1)) <= q['n'];
                        });
                      }};
    r.push_back(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "A8l";
    d.statement = "sum_{k=0..n} k*C(n,k) = n*2^(n-1)";
    d.parameter_names = {'n'};
    d.domain = {at_least('n', 1)};
    auto lhs = [](const Params& q, const Binom& C) {
      ExactInt s{0};
      for (std::int64_t k = 0; k <= q['n']; ++k) s += ExactInt(k) * C(q['n'], k);
      return s;
    };
    d.lhs = closed(lhs);
    d.rhs = simple([](const Params& q) { return ExactInt(q['n']) * pow_of(2, q['n'] - 1); });
    d.oracle = generic_recount(lhs, "n <= binary width", [](const Params& q) { return q['n']; });
    r.push_back(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "A8m";
    d.statement = "sum_{p=0..n} C(k+p,p) = C(k+n+1,n)";
    d.note = "corrected from printed form: summand printed as k*C(k+p,p)";
    d.parameter_names = {'n', 'k'};
    d.lhs = closed(hockey_stick_sum);
    d.rhs = closed([](const Params& q, const Binom& C) { return C(q['k'] + q['n'] + 1, q['n']); });
    d.oracle = generic_recount(hockey_stick_sum, "k+n <= binary width",
                               [](const Params& q) { return q['k'] + q['n']; });
    r.push_back(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "A8n";
    d.statement = "sum_{k=0..n} C(2k,k)*C(2n-2k,n-k) = 4^n";
    d.parameter_names = {'n'};
    auto lhs = [](const Params& q, const Binom& C) {
      const auto n = q['n'];
      ExactInt s{0};
      for (std::int64_t k = 0; k <= n; ++k) s += C(2 * k, k) * C(2 * n - 2 * k, n - k);
      return s;
    };
    d.lhs = closed(lhs);
    d.rhs = simple([](const Params& q) { return pow_of(4, q['n']); });
    d.oracle = generic_recount(lhs, "2n <= binary width", [](const Params& q) { return 2 * q['n']; });
    r.push_back(std::move(d));
  }
  return r;
}

inline std::vector<IdentityDescriptor> build_printed_forms() {
  std::vector<IdentityDescriptor> r;
  {
    IdentityDescriptor d;
    d.id = "A8i-printed";
    d.statement = "sum_{j=0..n} C(n,j)*(p-1)^(n-j) = p^k";
    d.note = "printed form, false in general; see A8i";
    d.parameter_names = {'n', 'p', 'k'};
    d.domain = {at_least('p', 1)};
    d.lhs = closed(weighted_row_sum);
    d.rhs = simple([](const Params& q) { return pow_of(q['p'], q['k']); });
    r.push_back(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "A8m-printed";
    d.statement = "sum_{p=0..n} k*C(k+p,p) = C(k+n+1,n)";
    d.note = "printed form, false in general; see A8m";
    d.parameter_names = {'n', 'k'};
    d.lhs = closed(hockey_stick_sum_printed);
    d.rhs = closed([](const Params& q, const Binom& C) { return C(q['k'] + q['n'] + 1, q['n']); });
    r.push_back(std::move(d));
  }
  return r;
}

}  // namespace detail

/// The identities proved by double counting, in catalogue order.
inline const std::vector<IdentityDescriptor>& registry() {
  static const std::vector<IdentityDescriptor> r = detail::build_registry();
  return r;
}

/// The two typeset variants that the registry corrects, kept so their
/// failures can be demonstrated.
inline const std::vector<IdentityDescriptor>& printed_forms() {
  static const std::vector<IdentityDescriptor> r = detail::build_printed_forms();
  return r;
}

inline std::string known_identity_ids() {
  std::string out;
  for (const auto* list : {&registry(), &printed_forms()}) {
    for (const auto& d : *list) {
      if (!out.empty()) out += ", ";
      out += d.id;
    }
  }
  return out;
}

/// Looks an id up in the registry, then among the printed forms.
inline const IdentityDescriptor& find_identity(std::string_view id) {
  for (const auto* list : {&registry(), &printed_forms()}) {
    for (const auto& d : *list) {
      if (d.id == id) return d;
    }
  }
  throw parameter_error("unknown identity '" + std::string(id) +
                        "'; known identities: " + known_identity_ids());
}

inline VerificationReport verify(const IdentityDescriptor& d, const Params& params,
                                 const VerifyOptions& options = {}) {
  if (auto violated = d.domain_violation(params)) {
    throw parameter_error("parameter-domain error: " + d.id + " requires " + *violated +
                          " (got " + params.to_string({'n', 'm', 'p', 'k'}) + ")");
  }
  VerificationReport report;
  report.identity = d.id;
  report.parameter_names = d.parameter_names;
  report.params = params;
  report.lhs = d.lhs(params, options.budget);
  report.rhs = d.rhs(params, options.budget);
  bool agree = report.lhs == report.rhs;
  for (const auto& alt : d.alternates) {
    report.alternates.push_back(alt(params, options.budget));
    agree = agree && report.alternates.back() == report.lhs;
  }
  bool skipped = false;
  if (d.oracle) {
    if (d.oracle->admissible(params, options.limits)) {
      try {
        report.oracle = d.oracle->count(params, options.budget);
      } catch (const budget_error&) {
        skipped = true;
      }
    } else {
      skipped = true;
    }
  }
  if (report.oracle && *report.oracle != report.lhs) agree = false;
  if (!agree) {
    report.verdict = Verdict::fail;
  } else {
    report.verdict = skipped ? Verdict::oracle_skipped : Verdict::pass;
  }
  return report;
}

inline VerificationReport verify(std::string_view id, const Params& params,
                                 const VerifyOptions& options = {}) {
  return verify(find_identity(id), params, options);
}

/// Inclusive range per parameter name.
using SweepBounds = std::map<char, std::pair<std::int64_t, std::int64_t>>;

struct SweepSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
};

struct SweepReport {
  std::string identity;
  std::vector<char> parameter_names;
  SweepBounds bounds;
  std::vector<VerificationReport> results;
  SweepSummary summary;

  [[nodiscard]] bool all_passed() const { return summary.fail == 0; }
};

/// Verifies every in-domain tuple of the grid, in lexicographic order of the
/// identity's parameter list. Tuples outside the domain are not visited.
inline SweepReport sweep(const IdentityDescriptor& d, const SweepBounds& bounds,
                         const VerifyOptions& options = {}) {
  SweepReport out;
  out.identity = d.id;
  out.parameter_names = d.parameter_names;
  for (char c : d.parameter_names) {
    auto it = bounds.find(c);
    if (it == bounds.end()) {
      throw parameter_error("sweep of " + d.id + " needs bounds for parameter " + std::string(1, c));
    }
    if (it->second.first > it->second.second || it->second.second < 0) {
      throw parameter_error("empty range for parameter " + std::string(1, c));
    }
    out.bounds[c] = {std::max<std::int64_t>(it->second.first, 0), it->second.second};
  }
  if (d.parameter_names.empty()) return out;

  Params current;
  for (char c : d.parameter_names) current.set(c, out.bounds[c].first);
  while (true) {
    if (!d.domain_violation(current)) {
      auto report = verify(d, current, options);
      switch (report.verdict) {
        case Verdict::pass: ++out.summary.pass; break;
        case Verdict::fail: ++out.summary.fail; break;
        case Verdict::oracle_skipped: ++out.summary.skipped; break;
      }
      out.results.push_back(std::move(report));
    }
    // Odometer over the grid, last parameter fastest.
    std::size_t i = d.parameter_names.size();
    while (i-- > 0) {
      const char c = d.parameter_names[i];
      if (current[c] < out.bounds[c].second) {
        current.set(c, current[c] + 1);
        break;
      }
      current.set(c, out.bounds[c].first);
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

inline SweepReport sweep(std::string_view id, const SweepBounds& bounds,
                         const VerifyOptions& options = {}) {
  return sweep(find_identity(id), bounds, options);
}

}  // namespace bijlab
