#include "sumfree/hpreal.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "sumfree/error.hpp"

namespace sumfree {

HPReal::HPReal(mpfr_prec_t precision) {
    mpfr_init2(lo_, precision);
    mpfr_init2(hi_, precision);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

HPReal::HPReal(const HPReal& o) {
    mpfr_init2(lo_, o.precision());
    mpfr_init2(hi_, o.precision());
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

HPReal::HPReal(HPReal&& o) noexcept : HPReal(o.precision()) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

HPReal& HPReal::operator=(const HPReal& o) {
    if (this != &o) {
        mpfr_set_prec(lo_, o.precision());
        mpfr_set_prec(hi_, o.precision());
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

HPReal& HPReal::operator=(HPReal&& o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

HPReal::~HPReal() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

HPReal HPReal::from_integer(const BigCount& v, mpfr_prec_t precision) {
    HPReal r(precision);
    mpfr_set_z(r.lo_, v.mpz().get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.mpz().get_mpz_t(), MPFR_RNDU);
    return r;
}

HPReal HPReal::from_long(long v, mpfr_prec_t precision) {
    HPReal r(precision);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

HPReal HPReal::from_rational(const Rational& q, mpfr_prec_t precision) {
    HPReal r(precision);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

HPReal HPReal::from_double(double v, mpfr_prec_t precision) { return from_rational(Rational(v), precision); }

HPReal HPReal::hull(const HPReal& a, const HPReal& b) {
    HPReal r(std::max(a.precision(), b.precision()));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

bool HPReal::contains(const Rational& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

double HPReal::width() const {
    mpfr_t w;
    mpfr_init2(w, precision());
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    const double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

double HPReal::relative_width() const {
    if (mpfr_zero_p(lo_)) return std::numeric_limits<double>::infinity();
    mpfr_t w;
    mpfr_init2(w, precision());
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    mpfr_div(w, w, lo_, MPFR_RNDU);
    mpfr_abs(w, w, MPFR_RNDU);
    const double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

double HPReal::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double HPReal::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
double HPReal::mid_double() const { return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)); }

Rational decimal_rational(double v) {
    if (!std::isfinite(v)) throw InvalidInput("not a finite number");
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::scientific);
    if (ec != std::errc()) throw InvalidInput("cannot format number");
    const std::string text(buf.data(), end);
    const auto e = text.find('e');
    std::string mantissa = text.substr(0, e);
    long exponent = std::stol(text.substr(e + 1));
    if (const auto dot = mantissa.find('.'); dot != std::string::npos) {
        exponent -= static_cast<long>(mantissa.size() - dot - 1);
        mantissa.erase(dot, 1);
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    Rational q(mpz_class(mantissa, 10));
    if (exponent >= 0) {
        q *= scale;
    } else {
        q /= scale;
    }
    q.canonicalize();
    return q;
}

namespace {
std::string format(const __mpfr_struct* x, int digits, mpfr_rnd_t rnd) {
    char* buf = nullptr;
    const std::string fmt = std::string("%.*R") + (rnd == MPFR_RNDD ? "D" : "U") + "e";
    if (mpfr_asprintf(&buf, fmt.c_str(), std::max(digits, 1) - 1, x) < 0) throw std::bad_alloc();
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}
}  // namespace

std::string HPReal::lower_string(int digits) const { return format(lo_, digits, MPFR_RNDD); }
std::string HPReal::upper_string(int digits) const { return format(hi_, digits, MPFR_RNDU); }

namespace {
mpfr_prec_t joint(const HPReal& a, const HPReal& b) { return std::max(a.precision(), b.precision()); }
}  // namespace

HPReal operator+(const HPReal& a, const HPReal& b) {
    HPReal r(joint(a, b));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

HPReal operator-(const HPReal& a, const HPReal& b) {
    HPReal r(joint(a, b));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

namespace {
using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

// Hull over the four endpoint combinations; valid for monotone-in-each-argument ops.
void endpoint_hull(mpfr_ptr lo, mpfr_ptr hi, mpfr_srcptr alo, mpfr_srcptr ahi, mpfr_srcptr blo, mpfr_srcptr bhi,
                   BinaryOp op) {
    const mpfr_prec_t prec = mpfr_get_prec(lo);
    mpfr_t t;
    mpfr_init2(t, prec);
    mpfr_srcptr as[2] = {alo, ahi};
    mpfr_srcptr bs[2] = {blo, bhi};
    bool first = true;
    for (auto x : as) {
        for (auto y : bs) {
            op(t, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t, lo)) mpfr_set(lo, t, MPFR_RNDD);
            op(t, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, hi)) mpfr_set(hi, t, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(t);
}
}  // namespace

HPReal operator*(const HPReal& a, const HPReal& b) {
    HPReal r(joint(a, b));
    endpoint_hull(r.lo_, r.hi_, a.lo_, a.hi_, b.lo_, b.hi_, mpfr_mul);
    return r;
}

HPReal operator/(const HPReal& a, const HPReal& b) {
    if (b.contains_zero()) throw InvalidInput("interval division by an interval containing zero");
    HPReal r(joint(a, b));
    endpoint_hull(r.lo_, r.hi_, a.lo_, a.hi_, b.lo_, b.hi_, mpfr_div);
    return r;
}

HPReal sqrt(const HPReal& a) {
    if (mpfr_sgn(a.lo_) < 0) throw InvalidInput("sqrt of an interval reaching below zero");
    HPReal r(a.precision());
    mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

HPReal exp(const HPReal& a) {
    HPReal r(a.precision());
    mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

HPReal log(const HPReal& a) {
    if (!a.is_positive()) throw InvalidInput("log of an interval that is not strictly positive");
    HPReal r(a.precision());
    mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

HPReal pow(const HPReal& a, const HPReal& e) {
    if (a.is_positive()) return exp(e * log(a));
    throw InvalidInput("real power needs a strictly positive base");
}

HPReal pow(const HPReal& a, const Rational& exponent) {
    Rational e = exponent;
    e.canonicalize();
    const int sign = sgn(e);
    if (sign == 0) return HPReal::from_long(1, a.precision());
    if (mpfr_sgn(a.lo_) < 0 || (sign < 0 && mpfr_sgn(a.lo_) == 0)) {
        throw InvalidInput("rational power needs a positive base");
    }
    const mpz_class& num = e.get_num();
    const mpz_class& den = e.get_den();
    if (!num.fits_slong_p() || !den.fits_ulong_p() || den > 1UL << 20) {
        if (!a.is_positive()) throw InvalidInput("real power needs a strictly positive base");
        return exp(HPReal::from_rational(e, a.precision()) * log(a));
    }
    const long k = num.get_si();
    const unsigned long q = den.get_ui();
    HPReal r(a.precision());
    // x -> x^(k/q) is increasing for k > 0 and decreasing for k < 0 on x > 0.
    mpfr_srcptr for_lo = sign > 0 ? a.lo_ : a.hi_;
    mpfr_srcptr for_hi = sign > 0 ? a.hi_ : a.lo_;
    mpfr_pow_si(r.lo_, for_lo, k, MPFR_RNDD);
    mpfr_pow_si(r.hi_, for_hi, k, MPFR_RNDU);
    if (q != 1) {
        mpfr_rootn_ui(r.lo_, r.lo_, q, MPFR_RNDD);
        mpfr_rootn_ui(r.hi_, r.hi_, q, MPFR_RNDU);
    }
    return r;
}

const char* to_string(Cmp c) {
    switch (c) {
        case Cmp::Less: return "less";
        case Cmp::Equal: return "equal";
        case Cmp::Greater: return "greater";
        case Cmp::Undecided: return "undecided";
    }
    return "undecided";
}

Cmp compare(const HPReal& a, const HPReal& b) {
    if (mpfr_less_p(a.upper(), b.lower())) return Cmp::Less;
    if (mpfr_greater_p(a.lower(), b.upper())) return Cmp::Greater;
    if (a.is_point() && b.is_point() && mpfr_equal_p(a.lower(), b.lower())) return Cmp::Equal;
    return Cmp::Undecided;
}

Cmp compare(const HPReal& a, const BigCount& b) {
    const auto* z = b.mpz().get_mpz_t();
    if (mpfr_cmp_z(a.upper(), z) < 0) return Cmp::Less;
    if (mpfr_cmp_z(a.lower(), z) > 0) return Cmp::Greater;
    if (a.is_point() && mpfr_cmp_z(a.lower(), z) == 0) return Cmp::Equal;
    return Cmp::Undecided;
}

Cmp compare(const BigCount& a, const HPReal& b) {
    switch (compare(b, a)) {
        case Cmp::Less: return Cmp::Greater;
        case Cmp::Greater: return Cmp::Less;
        case Cmp::Equal: return Cmp::Equal;
        case Cmp::Undecided: return Cmp::Undecided;
    }
    return Cmp::Undecided;
}

}  // namespace sumfree
