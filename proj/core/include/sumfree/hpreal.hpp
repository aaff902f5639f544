#pragma once

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

#include "sumfree/bigcount.hpp"

namespace sumfree {

using Rational = mpq_class;

/// The shortest decimal that round-trips to v, as an exact rational: 0.4 gives 2/5.
Rational decimal_rational(double v);

inline constexpr mpfr_prec_t kDefaultPrecisionBits = 128;
inline constexpr mpfr_prec_t kMaxPrecisionBits = 1024;

/// Closed interval [lo, hi] of MPFR numbers. Every operation rounds lo down and hi up, so
/// the true value of any expression built from exact inputs stays inside the interval.
class HPReal {
public:
    explicit HPReal(mpfr_prec_t precision = kDefaultPrecisionBits);
    HPReal(const HPReal& o);
    HPReal(HPReal&& o) noexcept;
    HPReal& operator=(const HPReal& o);
    HPReal& operator=(HPReal&& o) noexcept;
    ~HPReal();

    static HPReal from_integer(const BigCount& v, mpfr_prec_t precision = kDefaultPrecisionBits);
    static HPReal from_long(long v, mpfr_prec_t precision = kDefaultPrecisionBits);
    static HPReal from_rational(const Rational& q, mpfr_prec_t precision = kDefaultPrecisionBits);
    /// Exact: every double is a dyadic rational.
    static HPReal from_double(double v, mpfr_prec_t precision = kDefaultPrecisionBits);
    /// Smallest interval containing both arguments.
    static HPReal hull(const HPReal& a, const HPReal& b);

    [[nodiscard]] mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
    [[nodiscard]] bool is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }
    [[nodiscard]] bool is_positive() const { return mpfr_sgn(lo_) > 0; }
    [[nodiscard]] bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
    [[nodiscard]] bool contains(const Rational& q) const;
    /// Upper bound on hi - lo.
    [[nodiscard]] double width() const;
    /// Upper bound on (hi - lo) / |lo|; infinity when lo = 0.
    [[nodiscard]] double relative_width() const;
    [[nodiscard]] double lower_double() const;
    [[nodiscard]] double upper_double() const;
    [[nodiscard]] double mid_double() const;
    /// Scientific notation with `digits` significant digits, rounded outward.
    [[nodiscard]] std::string lower_string(int digits) const;
    [[nodiscard]] std::string upper_string(int digits) const;
    [[nodiscard]] const __mpfr_struct* lower() const { return lo_; }
    [[nodiscard]] const __mpfr_struct* upper() const { return hi_; }

    friend HPReal operator+(const HPReal& a, const HPReal& b);
    friend HPReal operator-(const HPReal& a, const HPReal& b);
    friend HPReal operator*(const HPReal& a, const HPReal& b);
    /// Throws InvalidInput when b contains zero.
    friend HPReal operator/(const HPReal& a, const HPReal& b);
    HPReal& operator+=(const HPReal& b) { return *this = *this + b; }
    HPReal& operator*=(const HPReal& b) { return *this = *this * b; }

    friend HPReal sqrt(const HPReal& a);
    friend HPReal exp(const HPReal& a);
    friend HPReal log(const HPReal& a);
    /// a^e for a > 0 (a >= 0 when e > 0). Integer and small-denominator exponents go through
    /// pow/rootn, which keeps e.g. 15^1 an exact point interval; other exponents use exp(e log a).
    friend HPReal pow(const HPReal& a, const Rational& e);
    /// a^e with a real-valued exponent interval, via exp(e log a).
    friend HPReal pow(const HPReal& a, const HPReal& e);

private:
    mpfr_t lo_;
    mpfr_t hi_;
};

enum class Cmp { Less, Equal, Greater, Undecided };

const char* to_string(Cmp c);

/// Less/Greater when the intervals are disjoint, Equal only for identical point intervals.
Cmp compare(const HPReal& a, const HPReal& b);
Cmp compare(const HPReal& a, const BigCount& b);
Cmp compare(const BigCount& a, const HPReal& b);

struct Decision {
    Cmp result = Cmp::Undecided;
    mpfr_prec_t precision = 0;
};

/// Calls cmp(precision) at 128, 256, 512, 1024 bits until the comparison decides.
template <typename CmpAtPrecision>
Decision decide(CmpAtPrecision&& cmp, mpfr_prec_t start = kDefaultPrecisionBits,
                mpfr_prec_t cap = kMaxPrecisionBits) {
    Decision d;
    for (mpfr_prec_t p = start; p <= cap; p *= 2) {
        d.precision = p;
        d.result = cmp(p);
        if (d.result != Cmp::Undecided) break;
    }
    return d;
}

}  // namespace sumfree
