#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sumfree {

__extension__ typedef unsigned __int128 UInt128;

/// Exact nonnegative integer used for every count in the library.
class BigCount {
public:
    BigCount() = default;
    BigCount(std::uint64_t v);  // NOLINT(google-explicit-constructor)
    explicit BigCount(const mpz_class& v);
    explicit BigCount(std::string_view decimal);

    BigCount& operator+=(const BigCount& o);
    BigCount& operator-=(const BigCount& o);
    BigCount& operator*=(const BigCount& o);

    friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
    friend BigCount operator-(BigCount a, const BigCount& b) { return a -= b; }
    friend BigCount operator*(BigCount a, const BigCount& b) { return a *= b; }

    friend bool operator==(const BigCount& a, const BigCount& b);
    friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b);

    static BigCount pow(const BigCount& base, unsigned long exponent);
    static BigCount pow2(unsigned long exponent);
    static BigCount binomial(unsigned long n, unsigned long k);
    static BigCount from_u128(UInt128 v);

    [[nodiscard]] bool is_odd() const;
    [[nodiscard]] bool fits_u64() const;
    [[nodiscard]] std::uint64_t to_u64() const;
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] const mpz_class& mpz() const { return value_; }

private:
    mpz_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const BigCount& v);

}  // namespace sumfree
