#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mz/errors.hpp"

namespace mz {

/// Absolute tolerance for real-valued comparisons. The Zagreb pipeline is
/// all-integer and stays exact; the tolerance only matters for fractional
/// minimal vectors and sampled data.
inline constexpr double kTol = 1e-9;

inline bool nearly_equal(double a, double b, double tol = kTol) {
    return std::abs(a - b) <= tol;
}

inline bool is_near_integer(double v, double tol = kTol) {
    return std::abs(v - static_cast<double>(std::llround(v))) <= tol;
}

/// A nonincreasing vector of nonnegative reals; the objects ordered by
/// majorization.
class OrderedVector {
public:
    explicit OrderedVector(std::vector<double> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) {
            throw PreconditionError("OrderedVector: at least one entry required");
        }
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (entries_[i] < -kTol) {
                throw PreconditionError("OrderedVector: negative entry at index " +
                                        std::to_string(i));
            }
            if (i > 0 && entries_[i] > entries_[i - 1] + kTol) {
                throw PreconditionError("OrderedVector: entries increase at index " +
                                        std::to_string(i));
            }
        }
    }

    /// Sorts the entries nonincreasing, then validates.
    static OrderedVector sorted(std::vector<double> entries) {
        std::sort(entries.begin(), entries.end(), std::greater<>());
        return OrderedVector(std::move(entries));
    }

    std::size_t size() const { return entries_.size(); }
    double operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<double>& entries() const { return entries_; }

    double total() const {
        return std::accumulate(entries_.begin(), entries_.end(), 0.0);
    }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    bool all_integer(double tol = kTol) const {
        return std::all_of(entries_.begin(), entries_.end(),
                           [tol](double v) { return is_near_integer(v, tol); });
    }

private:
    std::vector<double> entries_;
};

/// Inclusive prefix sums: result[k] = x_1 + ... + x_{k+1}.
inline std::vector<double> partial_sums(const OrderedVector& x) {
    std::vector<double> sums(x.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc += x[i];
        sums[i] = acc;
    }
    return sums;
}

/// Sum of the first k entries (k may be 0 or n).
inline double prefix_sum(const OrderedVector& x, std::size_t k) {
    double acc = 0.0;
    for (std::size_t i = 0; i < k && i < x.size(); ++i) acc += x[i];
    return acc;
}

/// Sum of the entries after position k, i.e. x_{k+1} + ... + x_n.
inline double suffix_sum(const OrderedVector& x, std::size_t k) {
    double acc = 0.0;
    for (std::size_t i = k; i < x.size(); ++i) acc += x[i];
    return acc;
}

/// True iff y majorizes x: every prefix sum of x is at most the matching
/// prefix sum of y and the totals agree within `tol`.
inline bool majorizes(const OrderedVector& y, const OrderedVector& x, double tol = kTol) {
    if (x.size() != y.size()) {
        throw DimensionError("majorizes: vectors have lengths " + std::to_string(y.size()) +
                             " and " + std::to_string(x.size()));
    }
    const std::size_t n = x.size();
    double px = 0.0;
    double py = 0.0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        px += x[k];
        py += y[k];
        if (px > py + tol) return false;
    }
    px += x[n - 1];
    py += y[n - 1];
    return std::abs(px - py) <= tol;
}

inline double sum_of_squares(const OrderedVector& x) {
    double acc = 0.0;
    for (double v : x) acc += v * v;
    return acc;
}

inline bool approx_equal(const OrderedVector& a, const OrderedVector& b, double tol = kTol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i] - b[i]) > tol) return false;
    }
    return true;
}

inline std::string to_string(const OrderedVector& x) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i > 0) os << ',';
        if (is_near_integer(x[i])) {
            os << std::llround(x[i]);
        } else {
            os.precision(12);
            os << x[i];
        }
    }
    os << ']';
    return os.str();
}

} // namespace mz
