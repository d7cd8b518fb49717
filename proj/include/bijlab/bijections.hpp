#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bijlab/budget.hpp"
#include "bijlab/errors.hpp"
#include "bijlab/exact_int.hpp"
#include "bijlab/exactmath.hpp"
#include "bijlab/radix_word.hpp"

namespace bijlab {

namespace detail {

inline void require_base(const RadixWord& w, Digit expected, const char* codec) {
  if (w.base() != expected) {
    throw codec_error(std::string(codec) + " codec expects base-" + std::to_string(expected) +
                      " words, got base " + std::to_string(w.base()));
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Subsets of {1..n} <-> n-digit binary words

class Subset {
 public:
  Subset(std::size_t universe_size, std::set<std::size_t> members)
      : universe_size_(universe_size), members_(std::move(members)) {
    for (auto m : members_) {
      if (m < 1 || m > universe_size_) {
        throw domain_error("subset member " + std::to_string(m) + " outside {1.." +
                           std::to_string(universe_size_) + "}");
      }
    }
  }

  [[nodiscard]] std::size_t universe_size() const { return universe_size_; }
  [[nodiscard]] const std::set<std::size_t>& members() const { return members_; }
  [[nodiscard]] bool contains(std::size_t i) const { return members_.contains(i); }

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  std::size_t universe_size_;
  std::set<std::size_t> members_;
};

/// Digit i (1-indexed from the left) is 1 iff i is a member.
inline RadixWord subset_encode(const Subset& s) {
  std::vector<Digit> digits(s.universe_size(), 0);
  for (auto m : s.members()) digits[m - 1] = 1;
  return RadixWord(2, std::move(digits));
}

inline Subset subset_decode(const RadixWord& w) {
  detail::require_base(w, 2, "subset");
  std::set<std::size_t> members;
  for (std::size_t i = 0; i < w.width(); ++i) {
    if (w[i] == 1) members.insert(i + 1);
  }
  return Subset(w.width(), std::move(members));
}

// ---------------------------------------------------------------------------
// Colourings of n objects with p colours <-> n-digit p-ary words

class Coloring {
 public:
  Coloring(Digit palette_size, std::vector<Digit> assignment)
      : palette_size_(palette_size), assignment_(std::move(assignment)) {
    if (palette_size_ < 2) {
      throw domain_error("palette size must be >= 2, got " + std::to_string(palette_size_));
    }
    for (std::size_t i = 0; i < assignment_.size(); ++i) {
      if (assignment_[i] >= palette_size_) {
        throw domain_error("object " + std::to_string(i + 1) + " has colour " +
                           std::to_string(assignment_[i]) + " outside a palette of " +
                           std::to_string(palette_size_));
      }
    }
  }

  [[nodiscard]] std::size_t object_count() const { return assignment_.size(); }
  [[nodiscard]] Digit palette_size() const { return palette_size_; }
  [[nodiscard]] std::span<const Digit> assignment() const { return assignment_; }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  Digit palette_size_;
  std::vector<Digit> assignment_;
};

inline RadixWord coloring_encode(const Coloring& c) {
  return RadixWord(c.palette_size(), {c.assignment().begin(), c.assignment().end()});
}

inline Coloring coloring_decode(const RadixWord& w, Digit palette_size) {
  detail::require_base(w, palette_size, "coloring");
  return Coloring(palette_size, {w.digits().begin(), w.digits().end()});
}

/// Number of p-colourings of n objects in which exactly k objects get colour
/// i: choose the k objects, then colour the remaining n-k with the other p-1
/// colours.
inline ExactInt coloring_count(std::int64_t n, Digit p, Digit i, std::int64_t k) {
  if (p < 2) throw domain_error("palette size must be >= 2, got " + std::to_string(p));
  if (i >= p) {
    throw domain_error("colour index " + std::to_string(i) + " outside a palette of " +
                       std::to_string(p));
  }
  if (n < 0 || k < 0 || k > n) {
    throw domain_error("coloring_count requires 0 <= k <= n, got n=" + std::to_string(n) +
                       " k=" + std::to_string(k));
  }
  return binomial(n, k) * power(ExactInt(p - 1), static_cast<std::uint64_t>(n - k));
}

// ---------------------------------------------------------------------------
// k-valued functions of n variables <-> (k^n)-digit k-ary words

class TruthTable {
 public:
  /// `outputs[r]` is the value on the input tuple whose n-digit base-k rank
  /// is r.
  TruthTable(std::size_t arity, Digit value_base, std::vector<Digit> outputs)
      : arity_(arity), value_base_(value_base), outputs_(std::move(outputs)) {
    if (value_base_ < 2) {
      throw domain_error("value base must be >= 2, got " + std::to_string(value_base_));
    }
    const ExactInt rows = word_count(value_base_, arity_);
    if (ExactInt(outputs_.size()) != rows) {
      throw domain_error("truth table of arity " + std::to_string(arity_) + " over base " +
                         std::to_string(value_base_) + " needs " + rows.str() +
                         " rows, got " + std::to_string(outputs_.size()));
    }
    for (Digit v : outputs_) {
      if (v >= value_base_) {
        throw domain_error("output value " + std::to_string(v) + " is not < " +
                           std::to_string(value_base_));
      }
    }
  }

  /// Builds a table from explicit (input, output) rows. Rows must already be
  /// in ascending input order; anything else is rejected, not sorted.
  static TruthTable from_rows(std::size_t arity, Digit value_base,
                              const std::vector<std::pair<RadixWord, Digit>>& rows) {
    std::vector<Digit> outputs;
    outputs.reserve(rows.size());
    ExactInt expected{0};
    for (const auto& [input, value] : rows) {
      if (input.base() != value_base || input.width() != arity) {
        throw codec_error("row input " + input.to_string() + " is not an " +
                          std::to_string(arity) + "-digit base-" +
                          std::to_string(value_base) + " tuple");
      }
      if (to_rank(input) != expected) {
        throw codec_error("truth table rows out of canonical order: expected input rank " +
                          expected.str() + ", got " + input.to_string());
      }
      outputs.push_back(value);
      expected += 1;
    }
    return TruthTable(arity, value_base, std::move(outputs));
  }

  [[nodiscard]] std::size_t arity() const { return arity_; }
  [[nodiscard]] Digit value_base() const { return value_base_; }
  [[nodiscard]] std::span<const Digit> outputs() const { return outputs_; }

  [[nodiscard]] Digit evaluate(const RadixWord& input) const {
    if (input.base() != value_base_ || input.width() != arity_) {
      throw domain_error("input " + input.to_string() + " does not match table shape");
    }
    return outputs_[to_rank(input).to_u64()];
  }

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  std::size_t arity_;
  Digit value_base_;
  std::vector<Digit> outputs_;
};

inline RadixWord truthtable_encode(const TruthTable& t) {
  return RadixWord(t.value_base(), {t.outputs().begin(), t.outputs().end()});
}

inline TruthTable truthtable_decode(const RadixWord& w, std::size_t arity) {
  const ExactInt rows = word_count(w.base(), arity);
  if (ExactInt(w.width()) != rows) {
    throw codec_error("a base-" + std::to_string(w.base()) + " table of arity " +
                      std::to_string(arity) + " needs a width-" + rows.str() +
                      " word, got width " + std::to_string(w.width()));
  }
  return TruthTable(arity, w.base(), {w.digits().begin(), w.digits().end()});
}

/// k^(k^n), the number of k-valued functions of n variables. Formula only.
inline ExactInt count_functions(std::size_t arity, Digit value_base) {
  if (value_base < 2) {
    throw domain_error("value base must be >= 2, got " + std::to_string(value_base));
  }
  const ExactInt rows = word_count(value_base, arity);
  if (!rows.fits_u64()) {
    throw range_error("k^n = " + rows.str() + " is too large an exponent");
  }
  return power(ExactInt(value_base), rows.to_u64());
}

// ---------------------------------------------------------------------------
// Solutions of x*y = a^p, a = product of n distinct primes <-> n-digit
// (p+1)-ary words

inline bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> first_primes(std::size_t count) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t v = 2; primes.size() < count; ++v) {
    if (is_prime(v)) primes.push_back(v);
  }
  return primes;
}

inline void validate_prime_list(std::span<const std::uint64_t> primes) {
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!is_prime(primes[i])) {
      throw domain_error(std::to_string(primes[i]) + " is not prime");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (primes[i] == primes[j]) {
        throw domain_error("prime " + std::to_string(primes[i]) + " listed twice");
      }
    }
  }
}

class DivisorPair {
 public:
  DivisorPair(std::vector<std::uint64_t> primes, std::uint32_t exponent_cap,
              std::vector<std::uint32_t> x_exponents)
      : primes_(std::move(primes)), exponent_cap_(exponent_cap),
        x_exponents_(std::move(x_exponents)) {
    if (exponent_cap_ < 1) throw domain_error("exponent p must be >= 1");
    validate_prime_list(primes_);
    if (x_exponents_.size() != primes_.size()) {
      throw domain_error("need one exponent per prime: " + std::to_string(primes_.size()) +
                         " primes, " + std::to_string(x_exponents_.size()) + " exponents");
    }
    for (auto b : x_exponents_) {
      if (b > exponent_cap_) {
        throw domain_error("exponent " + std::to_string(b) + " exceeds p = " +
                           std::to_string(exponent_cap_));
      }
    }
  }

  [[nodiscard]] std::span<const std::uint64_t> primes() const { return primes_; }
  [[nodiscard]] std::uint32_t exponent_cap() const { return exponent_cap_; }
  [[nodiscard]] std::span<const std::uint32_t> x_exponents() const { return x_exponents_; }

  [[nodiscard]] ExactInt x() const {
    ExactInt out{1};
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      out *= power(ExactInt(primes_[i]), x_exponents_[i]);
    }
    return out;
  }

  [[nodiscard]] ExactInt y() const {
    ExactInt out{1};
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      out *= power(ExactInt(primes_[i]), exponent_cap_ - x_exponents_[i]);
    }
    return out;
  }

  /// a^p where a is the product of the primes.
  [[nodiscard]] ExactInt target() const {
    ExactInt a{1};
    for (auto q : primes_) a *= ExactInt(q);
    return power(a, exponent_cap_);
  }

  friend bool operator==(const DivisorPair&, const DivisorPair&) = default;

 private:
  std::vector<std::uint64_t> primes_;
  std::uint32_t exponent_cap_;
  std::vector<std::uint32_t> x_exponents_;
};

inline RadixWord divisor_encode(const DivisorPair& d) {
  return RadixWord(d.exponent_cap() + 1, {d.x_exponents().begin(), d.x_exponents().end()});
}

inline DivisorPair divisor_decode(const RadixWord& w, std::vector<std::uint64_t> primes) {
  if (w.width() != primes.size()) {
    throw codec_error("divisor word width " + std::to_string(w.width()) + " does not match " +
                      std::to_string(primes.size()) + " primes");
  }
  return DivisorPair(std::move(primes), w.base() - 1, {w.digits().begin(), w.digits().end()});
}

/// (p+1)^n.
inline ExactInt count_xy_solutions(std::size_t prime_count, std::uint32_t p) {
  if (p < 1) throw domain_error("exponent p must be >= 1");
  return power(ExactInt(p + 1), prime_count);
}

// ---------------------------------------------------------------------------
// Staircase walks that spell an L-letter word <-> (L-1)-digit binary words
//
// Letter j of the word sits on every cell (row, col) with row + col = j. A
// walk starts at (0, 0) and each move goes one cell right or one cell down.

enum class Move : std::uint8_t { Down = 0, Right = 1 };

class GridWalk {
 public:
  explicit GridWalk(std::vector<Move> moves) : moves_(std::move(moves)) {}

  /// Number of letters read, one more than the number of moves.
  [[nodiscard]] std::size_t word_length() const { return moves_.size() + 1; }
  [[nodiscard]] std::span<const Move> moves() const { return moves_; }

  /// (row, col) of every visited cell, starting at (0, 0).
  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> cells() const {
    std::vector<std::pair<std::size_t, std::size_t>> out{{0, 0}};
    for (Move m : moves_) {
      auto [r, c] = out.back();
      out.emplace_back(m == Move::Down ? r + 1 : r, m == Move::Right ? c + 1 : c);
    }
    return out;
  }

  friend bool operator==(const GridWalk&, const GridWalk&) = default;

 private:
  std::vector<Move> moves_;
};

/// Digit i is 1 when move i goes right, 0 when it goes down.
inline RadixWord walk_encode(const GridWalk& w) {
  std::vector<Digit> digits;
  digits.reserve(w.moves().size());
  for (Move m : w.moves()) digits.push_back(m == Move::Right ? 1 : 0);
  return RadixWord(2, std::move(digits));
}

inline GridWalk walk_decode(const RadixWord& w) {
  detail::require_base(w, 2, "walk");
  std::vector<Move> moves;
  moves.reserve(w.width());
  for (Digit d : w.digits()) moves.push_back(d == 1 ? Move::Right : Move::Down);
  return GridWalk(std::move(moves));
}

/// 2^(L-1).
inline ExactInt count_walks(std::size_t word_length) {
  if (word_length < 1) throw domain_error("word length must be >= 1");
  return power(ExactInt(2), word_length - 1);
}

// ---------------------------------------------------------------------------
// Permutations and their fixed-point masks

class Permutation {
 public:
  /// `images[i]` is the image of i+1; values are 1-based.
  explicit Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (auto v : images_) {
      if (v < 1 || v > images_.size() || seen[v]) {
        throw domain_error("not a permutation of {1.." + std::to_string(images_.size()) + "}");
      }
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<std::uint32_t> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<std::uint32_t>(i + 1);
    return Permutation(std::move(images));
  }

  [[nodiscard]] std::size_t size() const { return images_.size(); }
  [[nodiscard]] std::span<const std::uint32_t> images() const { return images_; }

  [[nodiscard]] std::size_t fixed_points() const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] == i + 1) ++count;
    }
    return count;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// Digit i is 1 iff i is a fixed point. Many permutations share a mask, so
/// there is no decode.
inline RadixWord fixed_point_mask(const Permutation& perm) {
  std::vector<Digit> digits(perm.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm.images()[i] == i + 1) digits[i] = 1;
  }
  return RadixWord(2, std::move(digits));
}

/// Visits all n! permutations of {1..n} in lexicographic order.
template <typename Fn>
void for_each_permutation(std::size_t n, const EnumBudget& budget, Fn&& fn) {
  require_budget(factorial(static_cast<std::int64_t>(n)), budget,
                 "enumeration of permutations of " + std::to_string(n) + " points");
  std::vector<std::uint32_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<std::uint32_t>(i + 1);
  do {
    fn(std::span<const std::uint32_t>(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

/// (p_n(0), ..., p_n(n)): how many permutations of {1..n} have exactly k
/// fixed points, by exhaustive enumeration.
inline std::vector<ExactInt> fixed_point_profile(std::size_t n, const EnumBudget& budget = {}) {
  std::vector<std::uint64_t> buckets(n + 1, 0);
  for_each_permutation(n, budget, [&](std::span<const std::uint32_t> images) {
    std::size_t fixed = 0;
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (images[i] == i + 1) ++fixed;
    }
    ++buckets[fixed];
  });
  return {buckets.begin(), buckets.end()};
}

/// For each position i, how many permutations fix i: the column sums of the
/// fixed-point masks.
inline std::vector<ExactInt> fixed_point_columns(std::size_t n, const EnumBudget& budget = {}) {
  std::vector<std::uint64_t> columns(n, 0);
  for_each_permutation(n, budget, [&](std::span<const std::uint32_t> images) {
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (images[i] == i + 1) ++columns[i];
    }
  });
  return {columns.begin(), columns.end()};
}

// ---------------------------------------------------------------------------
// Plain-text renderings, used by the CLI listings.

inline std::string to_string(const Subset& s) {
  std::string out = "{";
  for (auto m : s.members()) {
    if (out.size() > 1) out.push_back(',');
    out += std::to_string(m);
  }
  return out + "}";
}

inline std::string to_string(const Coloring& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.assignment().size(); ++i) {
    if (i != 0) out.push_back(',');
    out += std::to_string(c.assignment()[i]);
  }
  return out + "]";
}

/// "00->0 01->0 10->0 11->1"
inline std::string to_string(const TruthTable& t) {
  std::string out;
  std::uint64_t row = 0;
  for (Digit v : t.outputs()) {
    if (!out.empty()) out.push_back(' ');
    out += from_rank(t.value_base(), t.arity(), ExactInt(row++)).to_string() + "->" + std::to_string(v);
  }
  return out;
}

inline std::string to_string(const DivisorPair& d) {
  return "x=" + d.x().str() + " y=" + d.y().str();
}

/// One letter per move, R or D.
inline std::string to_string(const GridWalk& w) {
  std::string out;
  for (Move m : w.moves()) out.push_back(m == Move::Right ? 'R' : 'D');
  return out;
}

inline std::string to_string(const Permutation& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i != 0) out.push_back(',');
    out += std::to_string(p.images()[i]);
  }
  return out + "]";
}

}  // namespace bijlab
