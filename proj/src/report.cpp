#include "stieltjes/report.hpp"

namespace stieltjes {

VerifyReport make_report(std::string check_id, std::vector<std::pair<std::string, std::string>> inputs,
                         const Real& residual, const Real& tolerance, std::string note) {
  VerifyReport r;
  r.check_id = std::move(check_id);
  r.inputs = std::move(inputs);
  r.residual = residual;
  r.tolerance = tolerance;
  r.note = std::move(note);
  r.passed = recompute_passed(r);
  return r;
}

bool recompute_passed(const VerifyReport& r) {
  return !r.residual.is_nan() && abs(r.residual) <= r.tolerance;
}

std::string inputs_key(const VerifyReport& r) {
  std::string out;
  for (const auto& [k, v] : r.inputs) {
    if (!out.empty()) out += ',';
    out += k;
    out += '=';
    out += v;
  }
  return out;
}

std::string input_value(const Real& x) {
  std::string s = to_string(x, 17);
  // trim trailing zeros of the mantissa: 2.50000000000000000e-01 -> 2.5e-01
  auto e = s.find('e');
  std::string mant = s.substr(0, e);
  std::string expo = e == std::string::npos ? "" : s.substr(e);
  if (mant.find('.') != std::string::npos) {
    while (!mant.empty() && mant.back() == '0') mant.pop_back();
    if (!mant.empty() && mant.back() == '.') mant.pop_back();
  }
  return mant + expo;
}

}  // namespace stieltjes
