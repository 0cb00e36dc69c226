// Extended-precision real numbers backed by MPFR.
//
// Every Real carries its own MPFR precision. Values produced by arithmetic
// or by the elementary functions are rounded (to nearest) at the calling
// thread's working precision, which is controlled with PrecisionScope.
// Copies keep the precision of their source.

#ifndef STIELTJES_EXT_REAL_HPP
#define STIELTJES_EXT_REAL_HPP

#include <mpfr.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace stieltjes {

inline constexpr int kDefaultDigits = 34;

/// Significant decimal digits of the calling thread's working precision.
int working_digits() noexcept;

/// Working precision in bits (34 digits -> 113 bits).
mpfr_prec_t working_bits() noexcept;

mpfr_prec_t digits_to_bits(int digits) noexcept;

/// RAII override of the thread-local working precision.
class PrecisionScope {
 public:
  explicit PrecisionScope(int digits);
  ~PrecisionScope();

  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  int saved_;
};

class Real {
 public:
  Real();
  Real(int v);
  Real(long v);
  Real(long long v);
  Real(unsigned v);
  Real(unsigned long v);
  Real(unsigned long long v);
  Real(double v);
  explicit Real(std::string_view decimal);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  Real operator-() const;

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  bool is_inf() const noexcept { return mpfr_inf_p(value_) != 0; }
  bool is_nan() const noexcept { return mpfr_nan_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }

  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
  long to_long() const noexcept { return mpfr_get_si(value_, MPFR_RNDZ); }

  friend void swap(Real& a, Real& b) noexcept;

 private:
  struct NoInit {};
  explicit Real(NoInit, mpfr_prec_t bits);
  friend Real make_uninitialized();

  mpfr_t value_;
  bool live_ = true;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);

template <std::integral I>
Real operator+(const Real& a, I b) { return a + Real(b); }
template <std::integral I>
Real operator+(I a, const Real& b) { return Real(a) + b; }
template <std::integral I>
Real operator-(const Real& a, I b) { return a - Real(b); }
template <std::integral I>
Real operator-(I a, const Real& b) { return Real(a) - b; }
template <std::integral I>
Real operator*(const Real& a, I b) { return a * Real(b); }
template <std::integral I>
Real operator*(I a, const Real& b) { return Real(a) * b; }
template <std::integral I>
Real operator/(const Real& a, I b) { return a / Real(b); }
template <std::integral I>
Real operator/(I a, const Real& b) { return Real(a) / b; }

template <std::floating_point F>
Real operator+(const Real& a, F b) { return a + Real(static_cast<double>(b)); }
template <std::floating_point F>
Real operator+(F a, const Real& b) { return Real(static_cast<double>(a)) + b; }
template <std::floating_point F>
Real operator-(const Real& a, F b) { return a - Real(static_cast<double>(b)); }
template <std::floating_point F>
Real operator-(F a, const Real& b) { return Real(static_cast<double>(a)) - b; }
template <std::floating_point F>
Real operator*(const Real& a, F b) { return a * Real(static_cast<double>(b)); }
template <std::floating_point F>
Real operator*(F a, const Real& b) { return Real(static_cast<double>(a)) * b; }
template <std::floating_point F>
Real operator/(const Real& a, F b) { return a / Real(static_cast<double>(b)); }
template <std::floating_point F>
Real operator/(F a, const Real& b) { return Real(static_cast<double>(a)) / b; }

bool operator==(const Real& a, const Real& b) noexcept;
std::partial_ordering operator<=>(const Real& a, const Real& b) noexcept;

template <class T>
  requires std::integral<T> || std::floating_point<T>
bool operator==(const Real& a, T b) { return a == Real(b); }
template <class T>
  requires std::integral<T> || std::floating_point<T>
std::partial_ordering operator<=>(const Real& a, T b) { return a <=> Real(b); }

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real exp(const Real& x);
Real pow(const Real& base, const Real& exponent);
Real pow(const Real& base, long exponent);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real cot(const Real& x);
Real floor(const Real& x);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

/// Integer power log(t)^m with the convention log^0 t == 1 for every t.
Real log_pow(const Real& t, int m);

Real pi();
Real ln2();
Real infinity();

/// 2^(1-bits): relative spacing of numbers at the working precision.
Real epsilon();

/// Unit in the last place of `x` at its own precision.
Real ulp(const Real& x);

/// Copy of `x` rounded to the working precision.
Real rounded(const Real& x);

/// 10^e at working precision.
Real pow10(int e);

/// Parses a decimal literal ("1e-12", "-0.25", "inf").
Real parse_real(std::string_view text);

/// Scientific decimal string with `digits` significant digits.
std::string to_string(const Real& x, int digits);

/// Number of decimal digits a tolerance asks for, ceil(-log10(tol)), at least 1.
int tolerance_digits(const Real& tol);

std::ostream& operator<<(std::ostream& os, const Real& x);

}  // namespace stieltjes

#endif  // STIELTJES_EXT_REAL_HPP
