#include "stieltjes/bernoulli.hpp"

#include <map>
#include <mutex>
#include <vector>

#include "stieltjes/errors.hpp"

namespace stieltjes {

namespace {

using boost::multiprecision::cpp_int;

// sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1, B_0 = 1.
std::vector<Rational> build_table() {
  const int top = kMaxBernoulliIndex;
  std::vector<Rational> b(top + 1);
  b[0] = 1;
  std::vector<cpp_int> row{1, 1};  // C(1, .)
  for (int m = 1; m <= top; ++m) {
    std::vector<cpp_int> next(m + 2);
    next[0] = 1;
    next[m + 1] = 1;
    for (int k = 1; k <= m; ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);  // C(m+1, .)
    if (m > 1 && m % 2 == 1) {
      b[m] = 0;
      continue;
    }
    Rational acc = 0;
    for (int k = 0; k < m; ++k) {
      if (k > 1 && k % 2 == 1) continue;
      acc += Rational(row[k]) * b[k];
    }
    b[m] = -acc / Rational(row[m]);
  }
  return b;
}

const std::vector<Rational>& table() {
  static const std::vector<Rational> t = build_table();
  return t;
}

std::mutex g_cache_mutex;
std::map<mpfr_prec_t, std::vector<Real>> g_scaled;

}  // namespace

const Rational& bernoulli(int index) {
  if (index < 2 || index % 2 != 0 || index > kMaxBernoulliIndex) {
    throw UnsupportedError("Bernoulli number B_" + std::to_string(index) +
                           " is outside the even range 2.." + std::to_string(kMaxBernoulliIndex));
  }
  return table()[index];
}

Real to_real(const Rational& q) {
  Real num(std::string_view(numerator(q).str()));
  Real den(std::string_view(denominator(q).str()));
  return num / den;
}

Real bernoulli_over_factorial(int j) {
  bernoulli(2 * j);  // range check
  const mpfr_prec_t bits = working_bits();
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  std::vector<Real>& slot = g_scaled[bits];
  if (slot.size() <= static_cast<std::size_t>(j)) {
    std::size_t old = slot.size();
    slot.resize(kMaxBernoulliIndex / 2 + 1);
    for (std::size_t i = std::max<std::size_t>(old, 1); i < slot.size(); ++i) {
      Rational f = 1;
      for (int k = 2; k <= static_cast<int>(2 * i); ++k) f *= k;
      slot[i] = to_real(table()[2 * i] / f);
    }
  }
  return slot[j];
}

}  // namespace stieltjes
