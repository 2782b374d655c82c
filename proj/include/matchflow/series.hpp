#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "matchflow/errors.hpp"

namespace matchflow {

// Counts get larger than 64 bits after a few dozen amalgamation steps,
// so every coefficient is an arbitrary-precision integer.
using BigInt = boost::multiprecision::cpp_int;

// A truncated integer sequence indexed by matching size: entry i holds the
// number of i-matchings, for 0 <= i <= bound. Equivalently an element of the
// polynomial ring Z[t]/(t^(bound+1)), which is what makes the block-Toeplitz
// transfer matrices collapse to 4x4 matrices of these.
class MatchSeries {
  public:
    MatchSeries() = default;

    explicit MatchSeries(int bound) {
        if (bound < 0) throw BadParameterError("series bound must be >= 0");
        coeffs_.assign(static_cast<size_t>(bound) + 1, BigInt(0));
    }

    // [1, 0, ..., 0]: the series of any edgeless graph, and the ring unit.
    static MatchSeries one(int bound) {
        MatchSeries s(bound);
        s.coeffs_[0] = 1;
        return s;
    }

    static MatchSeries of(int bound, std::initializer_list<long long> head) {
        MatchSeries s(bound);
        int i = 0;
        for (long long v : head) {
            if (i > bound) break;
            s.coeffs_[static_cast<size_t>(i++)] = v;
        }
        return s;
    }

    int bound() const { return static_cast<int>(coeffs_.size()) - 1; }

    const BigInt& operator[](int i) const { return coeffs_[static_cast<size_t>(i)]; }
    BigInt& operator[](int i) { return coeffs_[static_cast<size_t>(i)]; }

    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(),
                           [](const BigInt& v) { return v == 0; });
    }

    BigInt sum() const {
        BigInt total = 0;
        for (const BigInt& v : coeffs_) total += v;
        return total;
    }

    friend bool operator==(const MatchSeries& a, const MatchSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const MatchSeries& a, const MatchSeries& b) { return !(a == b); }

  private:
    std::vector<BigInt> coeffs_;
};

inline void check_same_bound(const MatchSeries& a, const MatchSeries& b) {
    if (a.bound() != b.bound())
        throw DimensionError("series bounds differ: " + std::to_string(a.bound()) +
                             " vs " + std::to_string(b.bound()));
}

// Product in Z[t]/(t^(bound+1)): plain convolution with everything past the
// bound dropped. Ascending storage makes this the whole Toeplitz block product.
inline MatchSeries truncated_mul(const MatchSeries& a, const MatchSeries& b) {
    check_same_bound(a, b);
    const int k = a.bound();
    MatchSeries out(k);
    for (int i = 0; i <= k; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= k; ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Multiply by t^places: prepend zeros, drop overflow.
inline MatchSeries shifted(const MatchSeries& a, int places) {
    if (places < 0) throw BadParameterError("shift must be >= 0");
    const int k = a.bound();
    MatchSeries out(k);
    for (int i = 0; i + places <= k; ++i) out[i + places] = a[i];
    return out;
}

inline MatchSeries operator+(const MatchSeries& a, const MatchSeries& b) {
    check_same_bound(a, b);
    MatchSeries out(a.bound());
    for (int i = 0; i <= a.bound(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline MatchSeries& operator+=(MatchSeries& a, const MatchSeries& b) {
    check_same_bound(a, b);
    for (int i = 0; i <= a.bound(); ++i) a[i] += b[i];
    return a;
}

inline std::vector<BigInt> ascending(const MatchSeries& s) { return s.coeffs(); }

inline std::vector<BigInt> descending(const MatchSeries& s) {
    std::vector<BigInt> v = s.coeffs();
    std::reverse(v.begin(), v.end());
    return v;
}

inline std::string join_coeffs(const std::vector<BigInt>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ' ';
        os << v[i];
    }
    return os.str();
}

}  // namespace matchflow
