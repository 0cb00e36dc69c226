#include "stieltjes/ext_real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <ostream>
#include <stdexcept>

static_assert(sizeof(long long) == sizeof(long), "64-bit long expected");

namespace stieltjes {

namespace {

thread_local int t_digits = kDefaultDigits;

constexpr double kLog2Of10 = 3.3219280948873623478703194294894;

}  // namespace

int working_digits() noexcept { return t_digits; }

mpfr_prec_t digits_to_bits(int digits) noexcept {
  return static_cast<mpfr_prec_t>(std::ceil(digits * kLog2Of10));
}

mpfr_prec_t working_bits() noexcept { return digits_to_bits(t_digits); }

PrecisionScope::PrecisionScope(int digits) : saved_(t_digits) {
  if (digits < 2 || digits > 100000) {
    throw std::invalid_argument("precision must be between 2 and 100000 digits, got " +
                                std::to_string(digits));
  }
  t_digits = digits;
}

PrecisionScope::~PrecisionScope() { t_digits = saved_; }

Real::Real() {
  mpfr_init2(value_, working_bits());
  mpfr_set_zero(value_, 1);
}

Real::Real(NoInit, mpfr_prec_t bits) { mpfr_init2(value_, bits); }

Real make_uninitialized() { return Real(Real::NoInit{}, working_bits()); }

Real::Real(int v) : Real(static_cast<long>(v)) {}

Real::Real(long v) {
  mpfr_init2(value_, working_bits());
  mpfr_set_si(value_, v, MPFR_RNDN);
}

Real::Real(long long v) {
  mpfr_init2(value_, working_bits());
  mpfr_set_si(value_, static_cast<long>(v), MPFR_RNDN);
}

Real::Real(unsigned v) : Real(static_cast<unsigned long>(v)) {}

Real::Real(unsigned long v) {
  mpfr_init2(value_, working_bits());
  mpfr_set_ui(value_, v, MPFR_RNDN);
}

Real::Real(unsigned long long v) {
  mpfr_init2(value_, working_bits());
  mpfr_set_ui(value_, static_cast<unsigned long>(v), MPFR_RNDN);
}

Real::Real(double v) {
  mpfr_init2(value_, working_bits());
  mpfr_set_d(value_, v, MPFR_RNDN);
}

Real::Real(std::string_view decimal) {
  mpfr_init2(value_, working_bits());
  std::string s(decimal);
  char* end = nullptr;
  mpfr_strtofr(value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == nullptr || end == s.c_str() || *end != '\0') {
    mpfr_clear(value_);
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  }
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  std::memcpy(static_cast<void*>(value_), static_cast<const void*>(other.value_), sizeof(mpfr_t));
  live_ = other.live_;
  other.live_ = false;
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    Real copy(other);
    swap(*this, copy);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  swap(*this, other);
  return *this;
}

Real::~Real() {
  if (live_) mpfr_clear(value_);
}

void swap(Real& a, Real& b) noexcept {
  mpfr_t tmp;
  std::memcpy(static_cast<void*>(tmp), static_cast<const void*>(a.value_), sizeof(mpfr_t));
  std::memcpy(static_cast<void*>(a.value_), static_cast<const void*>(b.value_), sizeof(mpfr_t));
  std::memcpy(static_cast<void*>(b.value_), static_cast<const void*>(tmp), sizeof(mpfr_t));
  std::swap(a.live_, b.live_);
}

Real& Real::operator+=(const Real& rhs) { return *this = *this + rhs; }
Real& Real::operator-=(const Real& rhs) { return *this = *this - rhs; }
Real& Real::operator*=(const Real& rhs) { return *this = *this * rhs; }
Real& Real::operator/=(const Real& rhs) { return *this = *this / rhs; }

Real Real::operator-() const {
  Real r = make_uninitialized();
  mpfr_neg(r.get(), value_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r = make_uninitialized();
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r = make_uninitialized();
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r = make_uninitialized();
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r = make_uninitialized();
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

bool operator==(const Real& a, const Real& b) noexcept { return mpfr_equal_p(a.get(), b.get()) != 0; }

std::partial_ordering operator<=>(const Real& a, const Real& b) noexcept {
  if (mpfr_unordered_p(a.get(), b.get())) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.get(), b.get());
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

namespace {

template <class F>
Real unary(const Real& x, F f) {
  Real r = make_uninitialized();
  f(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log1p(const Real& x) { return unary(x, mpfr_log1p); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real tan(const Real& x) { return unary(x, mpfr_tan); }
Real cot(const Real& x) { return unary(x, mpfr_cot); }

Real floor(const Real& x) {
  Real r = make_uninitialized();
  mpfr_floor(r.get(), x.get());
  return r;
}

Real pow(const Real& base, const Real& exponent) {
  Real r = make_uninitialized();
  mpfr_pow(r.get(), base.get(), exponent.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& base, long exponent) {
  Real r = make_uninitialized();
  mpfr_pow_si(r.get(), base.get(), exponent, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real log_pow(const Real& t, int m) {
  if (m == 0) return Real(1);
  Real l = log(t);
  if (m == 1) return l;
  return pow(l, static_cast<long>(m));
}

Real pi() {
  Real r = make_uninitialized();
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real ln2() {
  Real r = make_uninitialized();
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

Real infinity() {
  Real r = make_uninitialized();
  mpfr_set_inf(r.get(), 1);
  return r;
}

Real epsilon() {
  Real r(1);
  mpfr_mul_2si(r.get(), r.get(), 1 - static_cast<long>(working_bits()), MPFR_RNDN);
  return r;
}

Real ulp(const Real& x) {
  if (x.is_zero() || !x.is_finite()) return epsilon();
  Real r(1);
  long e = mpfr_get_exp(x.get()) - static_cast<long>(x.precision());
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

Real rounded(const Real& x) {
  Real r = make_uninitialized();
  mpfr_set(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow10(int e) { return pow(Real(10), static_cast<long>(e)); }

Real parse_real(std::string_view text) { return Real(text); }

std::string to_string(const Real& x, int digits) {
  if (x.is_nan()) return "nan";
  if (x.is_inf()) return x.sign() < 0 ? "-inf" : "inf";
  digits = std::max(digits, 1);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, x.get());
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

int tolerance_digits(const Real& tol) {
  if (!(tol > 0) || tol.is_inf()) return 1;
  double d = -std::log10(tol.to_double());
  if (!std::isfinite(d)) {
    // below double range: use the binary exponent
    d = -static_cast<double>(mpfr_get_exp(tol.get())) * 0.30102999566398119521;
  }
  return std::max(1, static_cast<int>(std::ceil(d - 1e-9)));
}

std::ostream& operator<<(std::ostream& os, const Real& x) {
  return os << to_string(x, static_cast<int>(os.precision() > 0 ? os.precision() : 17));
}

}  // namespace stieltjes
