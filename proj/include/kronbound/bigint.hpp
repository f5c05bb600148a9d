#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <string>

namespace kronbound {

/// Exact arbitrary-precision integer. Non-negative for enumerative counts,
/// signed for characters and inverse Kostka entries.
using Count = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Count& value) { return value.str(); }

/// Natural logarithm of a positive integer, accurate for values far beyond
/// the double range. Returns -inf for zero.
inline double log_count(const Count& value) {
    if (value <= 0) return -INFINITY;
    const unsigned bits = boost::multiprecision::msb(value) + 1;
    if (bits <= 1000) return std::log(value.convert_to<double>());
    const unsigned shift = bits - 64;
    const Count top = value >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

/// Scientific rendering of a decimal digit string with `digits` significant
/// figures, e.g. "1.47e141". Rounds half up on the first dropped digit.
inline std::string scientific_from_digits(std::string s, int digits = 3) {
    bool negative = false;
    if (!s.empty() && s[0] == '-') {
        negative = true;
        s.erase(0, 1);
    }
    int exponent = static_cast<int>(s.size()) - 1;
    std::string mant = s.substr(0, std::min<std::size_t>(s.size(), digits));
    while (static_cast<int>(mant.size()) < digits) mant.push_back('0');
    if (static_cast<int>(s.size()) > digits && s[digits] >= '5') {
        int i = digits - 1;
        while (i >= 0 && mant[i] == '9') mant[i--] = '0';
        if (i >= 0) {
            ++mant[i];
        } else {
            mant.insert(mant.begin(), '1');
            mant.pop_back();
            ++exponent;
        }
    }
    std::string out = negative ? "-" : "";
    out += mant[0];
    if (digits > 1) {
        out += '.';
        out += mant.substr(1);
    }
    out += 'e' + std::to_string(exponent);
    return out;
}

inline std::string approx(const Count& value, int digits = 3) {
    return scientific_from_digits(value.str(), digits);
}

/// Scientific rendering of exp(log_value) without ever materialising it.
inline std::string approx_from_log(double log_value, int digits = 3) {
    if (!std::isfinite(log_value)) return log_value > 0 ? "inf" : "0";
    const double log10v = log_value / std::log(10.0);
    double exponent = std::floor(log10v);
    double mant = std::pow(10.0, log10v - exponent);
    const double scale = std::pow(10.0, digits - 1);
    mant = std::round(mant * scale) / scale;
    if (mant >= 10.0) {
        mant /= 10.0;
        exponent += 1;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*fe%d", digits - 1, mant, static_cast<int>(exponent));
    return buf;
}

inline Count factorial(int n) {
    Count r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Count binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Count r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

}  // namespace kronbound
