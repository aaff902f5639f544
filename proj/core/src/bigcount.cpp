#include "sumfree/bigcount.hpp"

#include <ostream>

#include "sumfree/error.hpp"

namespace sumfree {

BigCount::BigCount(std::uint64_t v) {
    mpz_import(value_.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
}

BigCount::BigCount(const mpz_class& v) : value_(v) {
    if (sgn(value_) < 0) throw InvalidInput("BigCount must be nonnegative");
}

BigCount::BigCount(std::string_view decimal) {
    if (decimal.empty() || value_.set_str(std::string(decimal), 10) != 0 || sgn(value_) < 0) {
        throw InvalidInput("not a nonnegative decimal integer: " + std::string(decimal));
    }
}

BigCount& BigCount::operator+=(const BigCount& o) {
    value_ += o.value_;
    return *this;
}

BigCount& BigCount::operator-=(const BigCount& o) {
    if (value_ < o.value_) throw InvalidInput("BigCount subtraction would go negative");
    value_ -= o.value_;
    return *this;
}

BigCount& BigCount::operator*=(const BigCount& o) {
    value_ *= o.value_;
    return *this;
}

bool operator==(const BigCount& a, const BigCount& b) { return cmp(a.value_, b.value_) == 0; }

std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

BigCount BigCount::pow(const BigCount& base, unsigned long exponent) {
    BigCount r;
    mpz_pow_ui(r.value_.get_mpz_t(), base.value_.get_mpz_t(), exponent);
    return r;
}

BigCount BigCount::pow2(unsigned long exponent) {
    BigCount r;
    mpz_setbit(r.value_.get_mpz_t(), exponent);
    return r;
}

BigCount BigCount::binomial(unsigned long n, unsigned long k) {
    BigCount r;
    if (k > n) return r;
    mpz_bin_uiui(r.value_.get_mpz_t(), n, k);
    return r;
}

BigCount BigCount::from_u128(UInt128 v) {
    const auto hi = static_cast<std::uint64_t>(v >> 64);
    const auto lo = static_cast<std::uint64_t>(v);
    BigCount r(hi);
    mpz_mul_2exp(r.value_.get_mpz_t(), r.value_.get_mpz_t(), 64);
    r += BigCount(lo);
    return r;
}

bool BigCount::is_odd() const { return mpz_odd_p(value_.get_mpz_t()) != 0; }

bool BigCount::fits_u64() const { return mpz_sizeinbase(value_.get_mpz_t(), 2) <= 64; }

std::uint64_t BigCount::to_u64() const {
    if (!fits_u64()) throw InvalidInput("BigCount does not fit in 64 bits");
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, value_.get_mpz_t());
    return out;
}

std::string BigCount::to_string() const { return value_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const BigCount& v) { return os << v.to_string(); }

}  // namespace sumfree
