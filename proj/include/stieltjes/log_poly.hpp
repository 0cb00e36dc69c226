#ifndef STIELTJES_LOG_POLY_HPP
#define STIELTJES_LOG_POLY_HPP

#include <vector>

#include "stieltjes/ext_real.hpp"

namespace stieltjes {

/// coeff * log(t)^log_power / t^inv_power
struct LogTerm {
  Real coeff;
  int log_power = 0;
  int inv_power = 0;
};

/// Finite sum  sum_i c_i log^{m_i}(t) / t^{p_i + sigma}.
///
/// The real offset sigma is shared by every term and is zero for the plain
/// log-polynomials; a non-zero sigma lets the same calculus handle t^{-s}.
class LogPoly {
 public:
  LogPoly() = default;
  explicit LogPoly(std::vector<LogTerm> terms, Real power_offset = Real(0));

  static LogPoly monomial(int log_power, int inv_power, const Real& coeff = Real(1));

  const std::vector<LogTerm>& terms() const noexcept { return terms_; }
  const Real& power_offset() const noexcept { return sigma_; }
  bool empty() const noexcept { return terms_.empty(); }

  /// Smallest p_i + sigma over the terms (how fast f decays).
  Real min_decay() const;

  Real operator()(const Real& t) const;

  /// Value at t of an antiderivative, without an integration constant.
  /// Every term must have p_i + sigma != 1 or be of the pure 1/t kind.
  Real antiderivative(const Real& t) const;

  LogPoly& operator+=(const LogPoly& rhs);
  LogPoly& operator*=(const Real& k);

  friend bool operator==(const LogPoly& a, const LogPoly& b);

 private:
  void canonicalize();

  std::vector<LogTerm> terms_;
  Real sigma_{0};
};

LogPoly operator+(LogPoly a, const LogPoly& b);
LogPoly operator*(const Real& k, LogPoly f);

/// Term-by-term derivative, like terms merged:
///   d/dt log^m t / t^q = m log^{m-1} t / t^{q+1} - q log^m t / t^{q+1}.
LogPoly logpoly_diff(const LogPoly& f);

}  // namespace stieltjes

#endif  // STIELTJES_LOG_POLY_HPP
