#include "stieltjes/von_mangoldt.hpp"

#include <algorithm>

#include "stieltjes/errors.hpp"
#include "stieltjes/summation.hpp"

namespace stieltjes {

VonMangoldtTable::VonMangoldtTable(std::int64_t limit) : limit_(limit) {
  if (limit < 2) throw DomainError("von Mangoldt table needs N >= 2");
  if (limit > 2'000'000'000) throw UnsupportedError("von Mangoldt table limited to N <= 2e9");
  composite_.assign(static_cast<std::size_t>(limit) + 1, false);
  composite_[0] = composite_[1] = true;
  for (std::int64_t p = 2; p * p <= limit; ++p) {
    if (composite_[p]) continue;
    for (std::int64_t q = p * p; q <= limit; q += p) composite_[q] = true;
  }
  for (std::int64_t p = 2; p * p <= limit; ++p) {
    if (composite_[p]) continue;
    for (std::int64_t q = p * p; q <= limit; q *= p) {
      higher_.emplace_back(q, p);
      if (q > limit / p) break;
    }
  }
  std::sort(higher_.begin(), higher_.end());
}

std::int64_t VonMangoldtTable::prime_base(std::int64_t k) const {
  if (k < 1 || k > limit_) throw DomainError("index " + std::to_string(k) + " outside the von Mangoldt table");
  if (!composite_[k]) return k;
  auto it = std::lower_bound(higher_.begin(), higher_.end(), std::make_pair(k, std::int64_t{0}));
  if (it != higher_.end() && it->first == k) return it->second;
  return 0;
}

Real VonMangoldtTable::operator()(std::int64_t k) const {
  std::int64_t p = prime_base(k);
  return p == 0 ? Real(0) : log(Real(p));
}

std::vector<std::pair<std::int64_t, std::int64_t>> VonMangoldtTable::prime_powers() const {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  auto hi = higher_.begin();
  for (std::int64_t k = 2; k <= limit_; ++k) {
    if (!composite_[k]) {
      out.emplace_back(k, k);
    } else if (hi != higher_.end() && hi->first == k) {
      out.push_back(*hi);
      ++hi;
    }
  }
  return out;
}

Real VonMangoldtTable::chebyshev_psi() const {
  CompensatedSum s;
  for (const auto& [k, p] : prime_powers()) s.add(log(Real(p)));
  return s.value();
}

VonMangoldtTable von_mangoldt(std::int64_t N) { return VonMangoldtTable(N); }

}  // namespace stieltjes
