#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sturmlab/errors.hpp"

namespace sturmlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// ⌊p/q⌋ with the sign convention of mathematical floor.
BigInt rat_floor(const BigRat& r);

/// An eventually periodic simple continued fraction [a0; a1, a2, ...].
///
/// head() stores a0 followed by any pre-periodic terms; tail() is the period
/// and must be nonempty for an irrational value (all values handled by the
/// library are quadratic irrationals in that representation).  Every term
/// after a0 must be >= 1.
class ContinuedFraction {
public:
  ContinuedFraction(std::vector<std::uint32_t> head, std::vector<std::uint32_t> tail);

  const std::vector<std::uint32_t>& head() const { return head_; }
  const std::vector<std::uint32_t>& tail() const { return tail_; }
  bool irrational() const { return !tail_.empty(); }

  /// i-th partial quotient (i = 0 is the integer part).
  std::uint32_t term(std::size_t i) const;

  /// Walks convergents p_k/q_k and maintains a strict rational bracket
  /// (lo, hi) around the value.  Usable once two terms were consumed.
  class ConvergentWalker {
  public:
    explicit ConvergentWalker(const ContinuedFraction& cf);
    void advance();
    std::size_t depth() const { return k_; }
    BigRat current() const;
    /// Strict open bracket (lo, hi); requires depth() >= 1.
    std::pair<BigRat, BigRat> bracket() const;
    BigRat width() const;

  private:
    const ContinuedFraction* cf_;
    std::size_t k_ = 0;
    BigInt p_prev_, p_cur_, q_prev_, q_cur_;
  };

  /// Consecutive-convergent bounds with hi - lo < width.
  std::pair<BigRat, BigRat> bracket(const BigRat& width) const;

  /// Sign of (value - r).  Never 0: the value is irrational, r rational.
  int compare(const BigRat& r) const;

  bool less_than(const BigRat& r) const { return compare(r) < 0; }
  bool greater_than(const BigRat& r) const { return compare(r) > 0; }

  double to_double() const;

  /// Renders "[0;2,(1)]" style: pre-periodic terms, then the period in parens.
  std::string to_string() const;

  /// 1 - value, for values in (0,1).
  ContinuedFraction one_minus() const;

  /// value/(1-value), for values in (0,1/2) (first partial quotient >= 2).
  /// This is the slope of the word decoded by L_a or R_a from a word of
  /// letter-b frequency `value`.
  ContinuedFraction derived_slope() const;

  /// Slope [0; d1+1, d2, d3, ...] of the characteristic word with directive
  /// (d1, d2, ...) given as head + nonempty periodic tail.
  static ContinuedFraction from_directive(const std::vector<std::uint32_t>& head,
                                          const std::vector<std::uint32_t>& tail);

private:
  // The term stream with the first `n` terms dropped, as (head, tail).
  std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> drop_terms(
      std::size_t n) const;

  std::vector<std::uint32_t> head_;
  std::vector<std::uint32_t> tail_;
};

/// Evaluates ⌊alpha*m + rho⌋ exactly, certifying each floor by bracketing
/// alpha between consecutive convergents.  Deepening is shared across calls,
/// so batch evaluation over m = 1..n costs O(1) rational operations per call
/// once the bracket is tight enough.
class ExactFloorEvaluator {
public:
  explicit ExactFloorEvaluator(const ContinuedFraction& alpha);
  BigInt floor_at(const BigInt& m, const BigRat& rho);

private:
  ContinuedFraction alpha_;
  ContinuedFraction::ConvergentWalker walker_;
};

}  // namespace sturmlab
