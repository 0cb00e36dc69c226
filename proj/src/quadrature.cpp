#include "stieltjes/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "stieltjes/errors.hpp"
#include "stieltjes/summation.hpp"

namespace stieltjes {

namespace {

std::mutex g_rules_mutex;
std::map<std::pair<int, mpfr_prec_t>, std::vector<std::pair<Real, Real>>> g_rules;

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<Real, Real> legendre(int n, const Real& x) {
  Real p0(1);
  Real p1 = x;
  for (int k = 2; k <= n; ++k) {
    Real p2 = (Real(2 * k - 1) * x * p1 - Real(k - 1) * p0) / Real(k);
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  Real dp = Real(n) * (x * p1 - p0) / (x * x - Real(1));
  return {std::move(p1), std::move(dp)};
}

std::vector<std::pair<Real, Real>> build_rule(int n) {
  std::vector<std::pair<Real, Real>> rule;
  rule.reserve(n);
  const Real tiny = epsilon() * 16;
  for (int i = 1; i <= n; ++i) {
    Real x(std::cos(M_PI * (i - 0.25) / (n + 0.5)));
    Real dp;
    for (int iter = 0; iter < 100; ++iter) {
      auto [p, d] = legendre(n, x);
      Real step = p / d;
      x -= step;
      dp = std::move(d);
      if (abs(step) <= tiny) break;
    }
    dp = legendre(n, x).second;
    Real w = Real(2) / ((Real(1) - x * x) * dp * dp);
    rule.emplace_back(std::move(x), std::move(w));
  }
  return rule;
}

Real panel_sum(const std::function<Real(const Real&)>& f, const std::vector<Real>& breaks,
               const std::vector<std::pair<Real, Real>>& rule) {
  CompensatedSum total;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    Real half = (breaks[i + 1] - breaks[i]) / 2;
    Real mid = (breaks[i + 1] + breaks[i]) / 2;
    CompensatedSum panel;
    for (const auto& [node, weight] : rule) {
      Real t = mid + half * node;
      Real v = f(t);
      if (!v.is_finite()) {
        throw DomainError("integrand is not finite at node x = " + to_string(t, 20));
      }
      panel.add(weight * v);
    }
    total.add(half * panel.value());
  }
  return total.value();
}

}  // namespace

const std::vector<std::pair<Real, Real>>& gauss_legendre_rule(int n) {
  if (n < 1 || n > 4096) throw UnsupportedError("Gauss-Legendre order must be in 1..4096");
  const auto key = std::make_pair(n, working_bits());
  {
    std::lock_guard<std::mutex> lock(g_rules_mutex);
    auto it = g_rules.find(key);
    if (it != g_rules.end()) return it->second;
  }
  auto rule = build_rule(n);
  std::lock_guard<std::mutex> lock(g_rules_mutex);
  return g_rules.emplace(key, std::move(rule)).first->second;
}

SeriesValue quad_gl(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                    int panels, int nodes_per_panel, bool singular_left) {
  if (!(a < b)) throw DomainError("quad_gl needs a < b");
  if (panels < 1) throw DomainError("quad_gl needs at least one panel");
  const auto& rule = gauss_legendre_rule(nodes_per_panel);

  std::vector<Real> coarse;
  if (singular_left) {
    // a, a + w 2^-(P-1), ..., a + w/2, b
    coarse.push_back(a);
    for (int k = panels - 1; k >= 1; --k) coarse.push_back(a + (b - a) / pow(Real(2), static_cast<long>(k)));
    coarse.push_back(b);
  } else {
    for (int k = 0; k <= panels; ++k) coarse.push_back(a + (b - a) * Real(k) / Real(panels));
  }
  std::vector<Real> fine;
  for (std::size_t i = 0; i + 1 < coarse.size(); ++i) {
    fine.push_back(coarse[i]);
    fine.push_back((coarse[i] + coarse[i + 1]) / 2);
  }
  fine.push_back(coarse.back());

  Real q1 = panel_sum(f, coarse, rule);
  Real q2 = panel_sum(f, fine, rule);
  Real err = abs(q2 - q1) + epsilon() * Real(4 * panels * nodes_per_panel) * abs(q2);
  const long used = 3L * panels * nodes_per_panel;
  return SeriesValue{std::move(q2), std::move(err), used, "gauss-legendre"};
}

}  // namespace stieltjes
