#pragma once

#include <cmath>
#include <cstddef>
#include <functional>

namespace cavdress {

/* Neumaier-compensated accumulator. The stationary sum rule and the
   dynamical conservation identity are asserted at 1e-12 relative over
   double sums with up to ~1e6 terms; naive left-to-right summation does
   not reliably hold that. */
class KahanSum {
public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/* 1 - cos(theta) evaluated as 2 sin^2(theta/2). Near revivals the phase
   sits within ~1e-10 of a multiple of 2*pi and the naive form flushes the
   residual to zero. */
inline double one_minus_cos(double theta) {
  const double s = std::sin(0.5 * theta);
  return 2.0 * s * s;
}

// Thread cap from CAVDRESS_THREADS (0 or unset means hardware concurrency).
int thread_budget();

/* Static chunked parallel loop. Every index writes only its own output
   slot, so results are bit-identical for any thread count. */
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace cavdress
