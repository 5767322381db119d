#include "sturmlab/continued_fraction.hpp"

#include <sstream>

namespace sturmlab {

BigInt rat_floor(const BigRat& r) {
  BigInt n = numerator(r), d = denominator(r);
  BigInt q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) --q;
  return q;
}

ContinuedFraction::ContinuedFraction(std::vector<std::uint32_t> head,
                                     std::vector<std::uint32_t> tail)
    : head_(std::move(head)), tail_(std::move(tail)) {
  if (head_.empty()) throw PreconditionError("continued fraction needs an integer part a0");
  for (std::size_t i = 1; i < head_.size(); ++i)
    if (head_[i] == 0) throw PreconditionError("continued fraction terms after a0 must be >= 1");
  for (std::uint32_t t : tail_)
    if (t == 0) throw PreconditionError("continued fraction periodic terms must be >= 1");
}

std::uint32_t ContinuedFraction::term(std::size_t i) const {
  if (i < head_.size()) return head_[i];
  if (tail_.empty())
    throw PreconditionError("continued fraction is finite; no term " + std::to_string(i));
  return tail_[(i - head_.size()) % tail_.size()];
}

ContinuedFraction::ConvergentWalker::ConvergentWalker(const ContinuedFraction& cf)
    : cf_(&cf), p_prev_(1), p_cur_(cf.term(0)), q_prev_(0), q_cur_(1) {}

void ContinuedFraction::ConvergentWalker::advance() {
  ++k_;
  BigInt a = cf_->term(k_);
  BigInt p = a * p_cur_ + p_prev_;
  BigInt q = a * q_cur_ + q_prev_;
  p_prev_ = std::move(p_cur_);
  q_prev_ = std::move(q_cur_);
  p_cur_ = std::move(p);
  q_cur_ = std::move(q);
}

BigRat ContinuedFraction::ConvergentWalker::current() const { return BigRat(p_cur_, q_cur_); }

std::pair<BigRat, BigRat> ContinuedFraction::ConvergentWalker::bracket() const {
  if (k_ < 1) throw PreconditionError("bracket needs at least two convergents");
  BigRat a(p_prev_, q_prev_), b(p_cur_, q_cur_);
  // Convergents alternate around the value; for an infinite expansion the
  // value is strictly between any two consecutive ones.
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

BigRat ContinuedFraction::ConvergentWalker::width() const {
  if (k_ < 1) throw PreconditionError("bracket needs at least two convergents");
  return BigRat(1, q_prev_ * q_cur_);
}

std::pair<BigRat, BigRat> ContinuedFraction::bracket(const BigRat& width) const {
  if (!irrational()) throw PreconditionError("bracket requires an infinite expansion");
  ConvergentWalker w(*this);
  w.advance();
  while (w.width() >= width) w.advance();
  return w.bracket();
}

int ContinuedFraction::compare(const BigRat& r) const {
  if (!irrational()) throw PreconditionError("compare requires an infinite expansion");
  ConvergentWalker w(*this);
  w.advance();
  for (;;) {
    auto [lo, hi] = w.bracket();
    if (r <= lo) return 1;   // value > lo >= r, strict since value != lo
    if (r >= hi) return -1;  // value < hi <= r
    w.advance();
  }
}

double ContinuedFraction::to_double() const {
  ConvergentWalker w(*this);
  if (!irrational()) return static_cast<double>(head_[0]);
  w.advance();
  while (w.width() > BigRat(1, 1000000000000LL)) w.advance();
  return static_cast<double>(w.current());
}

std::string ContinuedFraction::to_string() const {
  std::ostringstream os;
  os << "[" << head_[0] << ";";
  for (std::size_t i = 1; i < head_.size(); ++i) {
    if (i > 1) os << ",";
    os << head_[i];
  }
  if (!tail_.empty()) {
    if (head_.size() > 1) os << ",";
    os << "(";
    for (std::size_t i = 0; i < tail_.size(); ++i) {
      if (i > 0) os << ",";
      os << tail_[i];
    }
    os << ")";
  }
  os << "]";
  return os.str();
}

std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>
ContinuedFraction::drop_terms(std::size_t n) const {
  if (n <= head_.size()) {
    std::vector<std::uint32_t> h(head_.begin() + static_cast<std::ptrdiff_t>(n), head_.end());
    return {std::move(h), tail_};
  }
  if (tail_.empty()) throw PreconditionError("dropped past the end of a finite expansion");
  std::size_t r = (n - head_.size()) % tail_.size();
  std::vector<std::uint32_t> rotated(tail_.begin() + static_cast<std::ptrdiff_t>(r), tail_.end());
  rotated.insert(rotated.end(), tail_.begin(), tail_.begin() + static_cast<std::ptrdiff_t>(r));
  return {{}, std::move(rotated)};
}

namespace {
ContinuedFraction prepend(std::vector<std::uint32_t> lead,
                          std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> rest) {
  lead.insert(lead.end(), rest.first.begin(), rest.first.end());
  return ContinuedFraction(std::move(lead), std::move(rest.second));
}
}  // namespace

ContinuedFraction ContinuedFraction::one_minus() const {
  if (head_[0] != 0) throw PreconditionError("one_minus requires a value in (0,1)");
  std::uint32_t a1 = term(1);
  if (a1 >= 2) return prepend({0, 1, a1 - 1}, drop_terms(2));
  // a1 == 1: 1 - [0;1,a2,a3,...] = [0;a2+1,a3,...]
  std::uint32_t a2 = term(2);
  return prepend({0, a2 + 1}, drop_terms(3));
}

ContinuedFraction ContinuedFraction::derived_slope() const {
  if (head_[0] != 0) throw PreconditionError("derived_slope requires a value in (0,1)");
  std::uint32_t a1 = term(1);
  if (a1 < 2)
    throw PreconditionError("derived_slope requires a value below 1/2 (first quotient >= 2)");
  return prepend({0, a1 - 1}, drop_terms(2));
}

ContinuedFraction ContinuedFraction::from_directive(const std::vector<std::uint32_t>& head,
                                                    const std::vector<std::uint32_t>& tail) {
  if (tail.empty()) throw PreconditionError("directive tail must be nonempty");
  // Stream d1, d2, ... with d1 bumped by one: [0; d1+1, d2, d3, ...].
  std::vector<std::uint32_t> src_head = head;
  src_head.insert(src_head.end(), tail.begin(), tail.end());
  std::uint32_t d1 = src_head.front();
  ContinuedFraction stream(std::move(src_head), tail);  // a0 slot holds d1; dropped below
  return prepend({0, d1 + 1}, stream.drop_terms(1));
}

ExactFloorEvaluator::ExactFloorEvaluator(const ContinuedFraction& alpha)
    : alpha_(alpha), walker_(alpha_) {
  if (!alpha_.irrational())
    throw PreconditionError("exact floor evaluation requires an irrational slope");
  walker_.advance();
}

BigInt ExactFloorEvaluator::floor_at(const BigInt& m, const BigRat& rho) {
  if (m == 0) return rat_floor(rho);
  if (m < 0) throw PreconditionError("floor_at requires m >= 0");
  for (;;) {
    auto [lo, hi] = walker_.bracket();
    BigInt flo = rat_floor(lo * m + rho);
    BigInt fhi = rat_floor(hi * m + rho);
    if (flo == fhi) return flo;
    // alpha*m + rho is irrational for m >= 1, so tightening always resolves.
    walker_.advance();
  }
}

}  // namespace sturmlab
