#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "pidan/errors.hpp"

namespace pidan {

// Sample median, averaging the two middle order statistics for even sizes.
inline double median(std::vector<double> v) {
    if (v.empty()) throw TooFewSamples("median of empty sequence");
    const std::size_t n = v.size();
    std::nth_element(v.begin(), v.begin() + (n - 1) / 2, v.end());
    double lo = v[(n - 1) / 2];
    if (n % 2 == 1) return lo;
    std::nth_element(v.begin(), v.begin() + n / 2, v.end());
    return 0.5 * (lo + v[n / 2]);
}

// Low median: the floor((n-1)/2)-th order statistic. Used inside the APD
// scale estimator, whose unbiasing constant 1.1926 is tied to this
// convention.
inline double median_low(std::vector<double> v) {
    if (v.empty()) throw TooFewSamples("median of empty sequence");
    const std::size_t k = (v.size() - 1) / 2;
    std::nth_element(v.begin(), v.begin() + k, v.end());
    return v[k];
}

// Linear-interpolation quantile, p in [0,1].
inline double quantile(std::vector<double> v, double p) {
    if (v.empty()) throw TooFewSamples("quantile of empty sequence");
    std::sort(v.begin(), v.end());
    const double pos = p * static_cast<double>(v.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= v.size()) return v.back();
    const double frac = pos - static_cast<double>(lo);
    return v[lo] + (v[lo + 1] - v[lo]) * frac;
}

// FNV-1a, used to derive per-class RNG streams from (global seed, class id)
// so results do not depend on scheduling order.
inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t derive_seed(std::uint64_t global_seed, const std::string& tag) {
    std::uint64_t h = fnv1a(tag) ^ (global_seed + 0x9e3779b97f4a7c15ull);
    // splitmix64 finalizer
    h ^= h >> 30; h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 27; h *= 0x94d049bb133111ebull;
    h ^= h >> 31;
    return h;
}

}  // namespace pidan
