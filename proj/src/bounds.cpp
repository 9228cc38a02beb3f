#include "satgraph/bounds.hpp"

#include <boost/multiprecision/integer.hpp>

#include "satgraph/errors.hpp"

namespace satgraph {

namespace {

BigInt binomial(const BigInt& n, std::uint64_t r) {
    if (n < r) return 0;
    BigInt out = 1;
    for (std::uint64_t i = 0; i < r; ++i) {
        out *= (n - i);
        out /= (i + 1);
    }
    return out;
}

BigInt power(BigInt base, std::uint64_t exp) {
    BigInt out = 1;
    while (exp != 0) {
        if (exp & 1U) out *= base;
        base *= base;
        exp >>= 1;
    }
    return out;
}

/// (1 - 2^-p)^m = (2^p - 1)^m / 2^(p*m)
Rational miss_probability(std::uint64_t p, std::uint64_t m) {
    const BigInt two_p = BigInt(1) << p;
    return Rational(power(two_p - 1, m), power(two_p, m));
}

}  // namespace

Rational failure_bound_a(std::uint64_t n, std::uint64_t k, std::uint64_t m) {
    if (n == 0 || k == 0) throw ContractViolation("failure_bound_a requires n >= 1 and k >= 1");
    const std::uint64_t r = n - 1;
    const BigInt vertices = BigInt(m + 1) * k;
    return Rational(binomial(vertices, r) * (BigInt(1) << r)) * miss_probability(r, m);
}

Rational failure_bound_b(std::uint64_t n, std::uint64_t k, std::uint64_t m) {
    if (n == 0 || k == 0 || m == 0) {
        throw ContractViolation("failure_bound_b requires n >= 1, k >= 1 and m >= 1");
    }
    Rational total = 0;
    for (std::uint64_t p = 1; p < n; ++p) {
        const BigInt configurations = power(BigInt(k), p + 1) * power(BigInt(m + 1), p);
        total += Rational(configurations) * miss_probability(p, m);
    }
    return total;
}

std::uint64_t minimal_certified_m(std::uint64_t n, std::uint64_t k) {
    if (n == 0 || k < n) throw ContractViolation("minimal_certified_m requires k >= n >= 1");
    for (std::uint64_t m = 1;; ++m) {
        if (failure_bound_a(n, k, m) + failure_bound_b(n, k, m) < 1) return m;
    }
}

std::string to_fraction_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

std::string to_decimal_string(const Rational& r, unsigned digits) {
    BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    std::string sign;
    if (num < 0) {
        sign = "-";
        num = -num;
    }
    const BigInt scale = power(BigInt(10), digits);
    const BigInt scaled = num * scale / den;
    const BigInt whole = scaled / scale;
    std::string frac = BigInt(scaled % scale).str();
    if (digits == 0) return sign + whole.str();
    frac.insert(0, digits - frac.size(), '0');
    return sign + whole.str() + "." + frac;
}

}  // namespace satgraph
