#ifndef FDSF_NUMERIC_HPP
#define FDSF_NUMERIC_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fdsf {

// Thrown when an enumeration exceeds its configured budget. The CLI maps
// this to its own exit code, distinct from validation failures.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

// All residues, encodings and cardinalities fit in int64_t; constructors
// reject anything past this bound instead of wrapping.
inline constexpr std::int64_t kMaxCardinality = std::int64_t(1) << 31;

inline bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

// p^n, throwing if the result would exceed kMaxCardinality.
inline std::int64_t checked_pow(std::int64_t p, int n) {
    std::int64_t v = 1;
    for (int i = 0; i < n; ++i) {
        if (v > kMaxCardinality / p)
            throw std::invalid_argument("checked_pow: " + std::to_string(p) + "^" +
                                        std::to_string(n) + " exceeds the exact-integer range");
        v *= p;
    }
    return v;
}

inline std::int64_t mod_norm(std::int64_t a, std::int64_t m) {
    std::int64_t v = a % m;
    return v < 0 ? v + m : v;
}

// Extended gcd: returns g = gcd(a,b) and sets x,y with a*x + b*y = g.
inline std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    std::int64_t x1, y1;
    std::int64_t g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
    std::int64_t x, y;
    std::int64_t g = ext_gcd(mod_norm(a, m), m, x, y);
    if (g != 1) throw std::domain_error("inv_mod: element not invertible");
    return mod_norm(x, m);
}

inline long long lcm_checked(long long a, long long b) {
    long long g = std::gcd(a, b);
    long long q = a / g;
    if (q > (std::int64_t(1) << 62) / b)
        throw std::overflow_error("lcm overflows 64-bit range");
    return q * b;
}

}  // namespace fdsf

#endif
