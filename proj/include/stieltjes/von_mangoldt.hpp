#ifndef STIELTJES_VON_MANGOLDT_HPP
#define STIELTJES_VON_MANGOLDT_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "stieltjes/ext_real.hpp"

namespace stieltjes {

/// Lambda(k) for k <= N: log p when k = p^m, zero otherwise. Immutable
/// after construction, so one table can be shared between threads.
class VonMangoldtTable {
 public:
  explicit VonMangoldtTable(std::int64_t limit);

  std::int64_t limit() const noexcept { return limit_; }

  /// p when k = p^m (m >= 1), 0 otherwise.
  std::int64_t prime_base(std::int64_t k) const;

  /// Lambda(k) at the working precision.
  Real operator()(std::int64_t k) const;

  /// All prime powers p^m <= N in ascending order, paired with p.
  std::vector<std::pair<std::int64_t, std::int64_t>> prime_powers() const;

  /// sum_{k<=N} Lambda(k) = log lcm(1..N).
  Real chebyshev_psi() const;

 private:
  std::int64_t limit_;
  std::vector<bool> composite_;                                  // sieve of Eratosthenes
  std::vector<std::pair<std::int64_t, std::int64_t>> higher_;    // (p^m, p), m >= 2, sorted
};

VonMangoldtTable von_mangoldt(std::int64_t N);

}  // namespace stieltjes

#endif  // STIELTJES_VON_MANGOLDT_HPP
