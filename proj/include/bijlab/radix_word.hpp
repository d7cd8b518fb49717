#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bijlab/budget.hpp"
#include "bijlab/errors.hpp"
#include "bijlab/exact_int.hpp"
#include "bijlab/exactmath.hpp"

namespace bijlab {

using Digit = std::uint32_t;

/**
 * A numeral with exactly `width` positions in base `base`, most significant
 * digit first. Values shorter than the width are zero-padded on the left, so
 * the width is part of the value: 0101 and 101 are different words.
 *
 * The empty word (width 0) is legal and has rank 0.
 */
class RadixWord {
 public:
  RadixWord(Digit base, std::vector<Digit> digits)
      : base_(checked_base(base)), digits_(std::move(digits)) {
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      if (digits_[i] >= base_) {
        throw domain_error("digit " + std::to_string(digits_[i]) + " at position " +
                           std::to_string(i + 1) + " is not < base " +
                           std::to_string(base_));
      }
    }
  }

  static RadixWord zeros(Digit base, std::size_t width) {
    return RadixWord(base, std::vector<Digit>(width, 0));
  }

  /// Inverse of to_string(). Bases up to 36 use one character per digit
  /// (0-9 then a-z); larger bases use '.'-separated decimal digits.
  static RadixWord parse(Digit base, std::string_view text) {
    checked_base(base);
    std::vector<Digit> digits;
    if (base <= 36) {
      digits.reserve(text.size());
      for (char c : text) digits.push_back(char_value(c));
    } else if (!text.empty()) {
      std::size_t start = 0;
      while (true) {
        const auto dot = text.find('.', start);
        const auto piece = text.substr(start, dot == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : dot - start);
        digits.push_back(static_cast<Digit>(ExactInt::parse(piece).to_u64()));
        if (dot == std::string_view::npos) break;
        start = dot + 1;
      }
    }
    return RadixWord(base, std::move(digits));
  }

  [[nodiscard]] Digit base() const { return base_; }
  [[nodiscard]] std::size_t width() const { return digits_.size(); }
  [[nodiscard]] std::span<const Digit> digits() const { return digits_; }
  [[nodiscard]] Digit operator[](std::size_t i) const { return digits_[i]; }

  [[nodiscard]] std::string to_string() const {
    std::string out;
    if (base_ <= 36) {
      out.reserve(digits_.size());
      for (Digit d : digits_) {
        out.push_back(d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10));
      }
    } else {
      for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (i != 0) out.push_back('.');
        out += std::to_string(digits_[i]);
      }
    }
    return out;
  }

  friend bool operator==(const RadixWord&, const RadixWord&) = default;

  /// Moves to the next word in rank order. Returns false (leaving the all-zero
  /// word behind) when this was the last word.
  bool increment() {
    for (std::size_t i = digits_.size(); i-- > 0;) {
      if (++digits_[i] < base_) return true;
      digits_[i] = 0;
    }
    return false;
  }

 private:
  static Digit checked_base(Digit base) {
    if (base < 2) {
      throw domain_error("radix base must be >= 2, got " + std::to_string(base));
    }
    return base;
  }

  static Digit char_value(char c) {
    if (c >= '0' && c <= '9') return static_cast<Digit>(c - '0');
    if (c >= 'a' && c <= 'z') return static_cast<Digit>(c - 'a' + 10);
    throw domain_error(std::string("invalid digit character '") + c + "'");
  }

  Digit base_;
  std::vector<Digit> digits_;
};

/// Number of words of the given shape, base^width.
inline ExactInt word_count(Digit base, std::size_t width) {
  return power(ExactInt(base), width);
}

inline RadixWord from_rank(Digit base, std::size_t width, const ExactInt& rank) {
  if (base < 2) {
    throw domain_error("radix base must be >= 2, got " + std::to_string(base));
  }
  const ExactInt limit = word_count(base, width);
  if (rank >= limit) {
    throw range_error("rank " + rank.str() + " outside [0, " + limit.str() +
                      ") for width-" + std::to_string(width) + " base-" +
                      std::to_string(base) + " words");
  }
  std::vector<Digit> digits(width, 0);
  ExactInt::backend_type value = rank.backend();
  for (std::size_t i = width; i-- > 0 && !value.is_zero();) {
    digits[i] = static_cast<Digit>(value % base);
    value /= base;
  }
  return RadixWord(base, std::move(digits));
}

inline ExactInt to_rank(const RadixWord& word) {
  ExactInt rank{0};
  const ExactInt base{word.base()};
  for (Digit d : word.digits()) {
    rank *= base;
    rank += ExactInt(d);
  }
  return rank;
}

inline std::size_t digit_count(const RadixWord& word, Digit d) {
  if (d >= word.base()) {
    throw domain_error("digit " + std::to_string(d) + " is not < base " +
                       std::to_string(word.base()));
  }
  return static_cast<std::size_t>(std::ranges::count(word.digits(), d));
}

/**
 * Walks every width-digit word of a base in rank order while keeping a
 * running histogram of digit frequencies, so predicates on digit counts cost
 * O(1) per word. Used by the brute-force recounts, which visit tens of
 * millions of words.
 */
class WordOdometer {
 public:
  WordOdometer(Digit base, std::size_t width)
      : base_(base), digits_(width, 0), frequency_(base, 0) {
    if (base < 2) {
      throw domain_error("radix base must be >= 2, got " + std::to_string(base));
    }
    frequency_[0] = width;
  }

  [[nodiscard]] Digit base() const { return base_; }
  [[nodiscard]] std::size_t width() const { return digits_.size(); }
  [[nodiscard]] std::span<const Digit> digits() const { return digits_; }
  [[nodiscard]] std::size_t frequency(Digit d) const { return frequency_[d]; }
  [[nodiscard]] RadixWord word() const { return RadixWord(base_, digits_); }

  /// Number of occurrences of `d` among the first `prefix` positions.
  [[nodiscard]] std::size_t prefix_frequency(Digit d, std::size_t prefix) const {
    return static_cast<std::size_t>(
        std::count(digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(prefix), d));
  }

  bool advance() {
    for (std::size_t i = digits_.size(); i-- > 0;) {
      --frequency_[digits_[i]];
      if (++digits_[i] < base_) {
        ++frequency_[digits_[i]];
        return true;
      }
      digits_[i] = 0;
      ++frequency_[0];
    }
    return false;
  }

 private:
  Digit base_;
  std::vector<Digit> digits_;
  std::vector<std::size_t> frequency_;
};

/// Calls fn(const WordOdometer&) once per word, in rank order.
template <typename Fn>
void for_each_word(Digit base, std::size_t width, const EnumBudget& budget, Fn&& fn) {
  if (base < 2) {
    throw domain_error("radix base must be >= 2, got " + std::to_string(base));
  }
  require_budget(word_count(base, width),
                 budget, "width-" + std::to_string(width) + " base-" + std::to_string(base) +
                             " word enumeration");
  WordOdometer odometer(base, width);
  do {
    fn(std::as_const(odometer));
  } while (odometer.advance());
}

/// Input range over all words of a shape, ascending rank. Restartable: each
/// begin() starts again from the all-zero word.
class RadixWordRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using iterator_concept = std::input_iterator_tag;
    using value_type = RadixWord;
    using difference_type = std::ptrdiff_t;
    using reference = const RadixWord&;
    using pointer = const RadixWord*;

    iterator() = default;
    explicit iterator(RadixWord first) : current_(std::move(first)), done_(false) {}

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++() {
      done_ = !current_.increment();
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    RadixWord current_{2, {}};
    bool done_ = true;
  };

  RadixWordRange(Digit base, std::size_t width) : base_(base), width_(width) {}

  [[nodiscard]] iterator begin() const { return iterator(RadixWord::zeros(base_, width_)); }
  [[nodiscard]] std::default_sentinel_t end() const { return {}; }
  [[nodiscard]] ExactInt size() const { return word_count(base_, width_); }

 private:
  Digit base_;
  std::size_t width_;
};

inline RadixWordRange iterate_all(Digit base, std::size_t width,
                                  const EnumBudget& budget = {}) {
  if (base < 2) {
    throw domain_error("radix base must be >= 2, got " + std::to_string(base));
  }
  require_budget(word_count(base, width), budget,
                 "width-" + std::to_string(width) + " base-" + std::to_string(base) +
                     " word enumeration");
  return RadixWordRange(base, width);
}

/// Exhaustive count of width-digit base words holding digit `d` exactly `k`
/// times.
inline ExactInt count_by_frequency(Digit base, std::size_t width, Digit d, std::size_t k,
                                   const EnumBudget& budget = {}) {
  if (d >= base) {
    throw domain_error("digit " + std::to_string(d) + " is not < base " +
                       std::to_string(base));
  }
  if (k > width) {
    throw domain_error("frequency " + std::to_string(k) + " exceeds width " +
                       std::to_string(width));
  }
  std::uint64_t hits = 0;
  for_each_word(base, width, budget, [&](const WordOdometer& w) {
    if (w.frequency(d) == k) ++hits;
  });
  return ExactInt(hits);
}

}  // namespace bijlab
