#include "stieltjes/log_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace stieltjes {

namespace {

// Powers base^0..base^top, with base^0 == 1 even when base == 0.
std::vector<Real> powers(const Real& base, int top) {
  std::vector<Real> out;
  out.reserve(top + 1);
  out.emplace_back(1);
  for (int k = 1; k <= top; ++k) out.push_back(out.back() * base);
  return out;
}

}  // namespace

LogPoly::LogPoly(std::vector<LogTerm> terms, Real power_offset)
    : terms_(std::move(terms)), sigma_(std::move(power_offset)) {
  for (const LogTerm& t : terms_) {
    if (t.log_power < 0 || t.inv_power < 0) {
      throw std::invalid_argument("LogPoly powers must be non-negative");
    }
  }
  canonicalize();
}

LogPoly LogPoly::monomial(int log_power, int inv_power, const Real& coeff) {
  return LogPoly({LogTerm{coeff, log_power, inv_power}});
}

void LogPoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), [](const LogTerm& a, const LogTerm& b) {
    return a.inv_power != b.inv_power ? a.inv_power < b.inv_power : a.log_power < b.log_power;
  });
  std::vector<LogTerm> merged;
  for (LogTerm& t : terms_) {
    if (!merged.empty() && merged.back().inv_power == t.inv_power &&
        merged.back().log_power == t.log_power) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const LogTerm& t) { return t.coeff.is_zero(); });
  terms_ = std::move(merged);
}

Real LogPoly::min_decay() const {
  if (terms_.empty()) return infinity();
  return Real(terms_.front().inv_power) + sigma_;
}

Real LogPoly::operator()(const Real& t) const {
  if (terms_.empty()) return Real(0);
  int top_m = 0;
  int top_p = 0;
  for (const LogTerm& term : terms_) {
    top_m = std::max(top_m, term.log_power);
    top_p = std::max(top_p, term.inv_power);
  }
  std::vector<Real> lp = powers(top_m > 0 ? log(t) : Real(0), top_m);
  std::vector<Real> ip = powers(Real(1) / t, top_p);
  Real acc(0);
  for (const LogTerm& term : terms_) acc += term.coeff * lp[term.log_power] * ip[term.inv_power];
  if (!sigma_.is_zero()) acc *= pow(t, -sigma_);
  return acc;
}

Real LogPoly::antiderivative(const Real& t) const {
  if (terms_.empty()) return Real(0);
  Real l = log(t);
  Real acc(0);
  for (const LogTerm& term : terms_) {
    const int m = term.log_power;
    Real q = Real(term.inv_power) + sigma_;
    if (q == 1) {
      acc += term.coeff * pow(l, static_cast<long>(m + 1)) / Real(m + 1);
      continue;
    }
    // t^{1-q} sum_j (-1)^{m-j} m!/j! log^j t / (1-q)^{m-j+1}
    Real one_minus_q = Real(1) - q;
    Real inner(0);
    Real ratio(1);  // m!/j! for j = m, m-1, ...
    Real denom = one_minus_q;
    for (int j = m; j >= 0; --j) {
      Real piece = ratio * log_pow(t, j) / denom;
      if ((m - j) % 2 == 1) piece = -piece;
      inner += piece;
      ratio *= j;
      denom *= one_minus_q;
    }
    acc += term.coeff * inner * pow(t, one_minus_q);
  }
  return acc;
}

LogPoly& LogPoly::operator+=(const LogPoly& rhs) {
  if (rhs.terms_.empty()) return *this;
  if (terms_.empty()) {
    sigma_ = rhs.sigma_;
  } else if (sigma_ != rhs.sigma_) {
    throw std::invalid_argument("cannot add LogPolys with different power offsets");
  }
  terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
  canonicalize();
  return *this;
}

LogPoly& LogPoly::operator*=(const Real& k) {
  for (LogTerm& t : terms_) t.coeff *= k;
  canonicalize();
  return *this;
}

bool operator==(const LogPoly& a, const LogPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (!a.terms_.empty() && a.sigma_ != b.sigma_) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const LogTerm& x = a.terms_[i];
    const LogTerm& y = b.terms_[i];
    if (x.log_power != y.log_power || x.inv_power != y.inv_power || x.coeff != y.coeff) return false;
  }
  return true;
}

LogPoly operator+(LogPoly a, const LogPoly& b) { return a += b; }

LogPoly operator*(const Real& k, LogPoly f) { return f *= k; }

LogPoly logpoly_diff(const LogPoly& f) {
  std::vector<LogTerm> out;
  for (const LogTerm& t : f.terms()) {
    Real q = Real(t.inv_power) + f.power_offset();
    if (t.log_power > 0) out.push_back({t.coeff * t.log_power, t.log_power - 1, t.inv_power + 1});
    if (!q.is_zero()) out.push_back({-(t.coeff * q), t.log_power, t.inv_power + 1});
  }
  return LogPoly(std::move(out), f.power_offset());
}

}  // namespace stieltjes
