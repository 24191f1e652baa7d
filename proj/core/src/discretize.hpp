// Internal kernel shared by the symmetric and asymmetric discretized
// operators: per-shift sliding-window maxima over a uniform partition,
// and the outward-rounded weighted accumulation.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dimcert/rounding.hpp"
#include "dimcert/scheme.hpp"

namespace dimcert::detail {

// Computes s[k] = sup of psi over the cells intersecting the argument hull
// { (x - shift)/r : x in cell_k, r in [rlo, rhi] }, with psi treated as 0
// outside the partition. Cells are treated as closed for the intersection
// test, which over-approximates by at most one touching cell and keeps the
// window mirror-symmetric about the partition midpoint.
//
// The hull endpoints are monotone in k, so the covered index window only
// moves right; a monotonic deque gives the maximum in O(N) per shift.
inline void windowed_sup(const UniformPartition& part,
                         std::span<const double> psi, double shift, double rlo,
                         double rhi, std::span<double> out,
                         std::vector<std::int64_t>& deque_buf) {
  const std::int64_t n = part.cells;
  deque_buf.resize(static_cast<std::size_t>(n));
  std::int64_t head = 0, tail = 0;  // deque indices into deque_buf
  std::int64_t lo = 0, hi = -1;     // current cell window [lo, hi]

  for (std::int64_t k = 0; k < n; ++k) {
    const double u1 = down(part.edge(k) - shift);
    const double u2 = up(part.edge(k + 1) - shift);
    const double h_lo = std::min(div_down(u1, rlo), div_down(u1, rhi));
    const double h_hi = std::max(div_up(u2, rlo), div_up(u2, rhi));

    while (hi < n - 1 && part.edge(hi + 1) <= h_hi) {
      ++hi;
      const double v = psi[static_cast<std::size_t>(hi)];
      while (tail > head &&
             psi[static_cast<std::size_t>(deque_buf[tail - 1])] <= v)
        --tail;
      deque_buf[tail++] = hi;
    }
    while (lo < n && part.edge(lo + 1) < h_lo) ++lo;
    while (tail > head && deque_buf[head] < lo) ++head;

    out[static_cast<std::size_t>(k)] =
        (tail > head) ? psi[static_cast<std::size_t>(deque_buf[head])] : 0.0;
  }
}

// Accumulates acc[k] += sum_i w_i * s_i[k] over shifts sorted ascending,
// rounding up after every operation. Outermost shift pairs with equal
// weight are grouped as w * (s_first + s_last); this keeps the result of
// a mirror-symmetric configuration exactly even and makes the equal-ratio
// asymmetric operator agree bitwise with the symmetric one.
struct ShiftAccumulator {
  const UniformPartition& part;
  std::span<const double> psi;
  double rlo, rhi;

  std::vector<double> buf_a, buf_b;
  std::vector<std::int64_t> deque_buf;

  ShiftAccumulator(const UniformPartition& p, std::span<const double> f,
                   double rl, double rh)
      : part(p), psi(f), rlo(rl), rhi(rh) {
    buf_a.resize(f.size());
    buf_b.resize(f.size());
  }

  void run(std::span<const double> shifts, std::span<const double> weights,
           std::span<double> acc) {
    const std::size_t m = shifts.size();
    const std::size_t n = psi.size();
    for (std::size_t i = 0, j = m - 1; i <= j; ++i, --j) {
      windowed_sup(part, psi, shifts[i], rlo, rhi, buf_a, deque_buf);
      if (i == j) {
        for (std::size_t k = 0; k < n; ++k)
          acc[k] = add_up(acc[k], mul_up(weights[i], buf_a[k]));
        break;
      }
      windowed_sup(part, psi, shifts[j], rlo, rhi, buf_b, deque_buf);
      if (weights[i] == weights[j]) {
        for (std::size_t k = 0; k < n; ++k)
          acc[k] = add_up(acc[k],
                          mul_up(weights[i], add_up(buf_a[k], buf_b[k])));
      } else {
        for (std::size_t k = 0; k < n; ++k)
          acc[k] = add_up(add_up(acc[k], mul_up(weights[i], buf_a[k])),
                          mul_up(weights[j], buf_b[k]));
      }
    }
  }
};

}  // namespace dimcert::detail
