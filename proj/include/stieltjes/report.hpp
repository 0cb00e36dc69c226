#ifndef STIELTJES_REPORT_HPP
#define STIELTJES_REPORT_HPP

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "stieltjes/ext_real.hpp"

namespace stieltjes {

/// Outcome of one identity check. passed is always |residual| <= tolerance.
struct VerifyReport {
  std::string check_id;
  std::vector<std::pair<std::string, std::string>> inputs;  // in a fixed order
  Real residual;
  Real tolerance;
  bool passed = false;
  std::chrono::duration<double> elapsed{0};
  std::string note;
};

VerifyReport make_report(std::string check_id, std::vector<std::pair<std::string, std::string>> inputs,
                         const Real& residual, const Real& tolerance, std::string note = {});

/// passed recomputed from residual and tolerance.
bool recompute_passed(const VerifyReport& r);

/// "n=1,x=0.5" form of the inputs, used for ordering and display.
std::string inputs_key(const VerifyReport& r);

/// Short decimal for report inputs.
std::string input_value(const Real& x);

}  // namespace stieltjes

#endif  // STIELTJES_REPORT_HPP
