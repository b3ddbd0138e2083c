#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mz/errors.hpp"
#include "mz/ordered_vector.hpp"

namespace mz {

/// The set of nonincreasing vectors x with m_i <= x_i <= M_i and a fixed
/// total. Both bound vectors are nonincreasing and 0 <= m <= M entrywise.
class BoxedSumSet {
public:
    BoxedSumSet(OrderedVector lower, OrderedVector upper, double total)
        : lower_(std::move(lower)), upper_(std::move(upper)), total_(total) {
        if (lower_.size() != upper_.size()) {
            throw DimensionError("BoxedSumSet: bound vectors have lengths " +
                                 std::to_string(lower_.size()) + " and " +
                                 std::to_string(upper_.size()));
        }
        for (std::size_t i = 0; i < lower_.size(); ++i) {
            if (lower_[i] > upper_[i] + kTol) {
                throw PreconditionError("BoxedSumSet: lower bound exceeds upper bound at index " +
                                        std::to_string(i));
            }
        }
        const double lo = lower_.total();
        const double hi = upper_.total();
        if (total_ < lo - kTol || total_ > hi + kTol) {
            throw InfeasibleSetError("BoxedSumSet: total " + std::to_string(total_) +
                                     " outside the feasible range [" + std::to_string(lo) +
                                     ", " + std::to_string(hi) + "]");
        }
    }

    std::size_t n() const { return lower_.size(); }
    const OrderedVector& lower() const { return lower_; }
    const OrderedVector& upper() const { return upper_; }
    double total() const { return total_; }

    bool contains(const OrderedVector& x, double tol = kTol) const {
        if (x.size() != n()) return false;
        for (std::size_t i = 0; i < n(); ++i) {
            if (x[i] < lower_[i] - tol || x[i] > upper_[i] + tol) return false;
        }
        return std::abs(x.total() - total_) <= tol;
    }

    /// True when the coordinate intervals are pairwise disjoint,
    /// i.e. M_{i+1} < m_i for every i.
    bool intervals_disjoint() const {
        for (std::size_t i = 0; i + 1 < n(); ++i) {
            if (upper_[i + 1] >= lower_[i] - kTol) return false;
        }
        return n() > 1;
    }

    bool is_integral(double tol = kTol) const {
        return lower_.all_integer(tol) && upper_.all_integer(tol) &&
               is_near_integer(total_, tol);
    }

private:
    OrderedVector lower_;
    OrderedVector upper_;
    double total_;
};

struct TwoBlockParams {
    std::size_t n = 0;   ///< vector length
    std::size_t h = 0;   ///< length of the first block
    double m1 = 0.0;     ///< first-block lower bound
    double M1 = 0.0;     ///< first-block upper bound
    double m2 = 0.0;     ///< second-block lower bound
    double M2 = 0.0;     ///< second-block upper bound
    double total = 0.0;  ///< prescribed sum
};

/// A sum-constrained set whose bounds are constant on two blocks: the first
/// h coordinates lie in [m1, M1], the remaining n-h in [m2, M2].
class TwoBlockSet {
public:
    explicit TwoBlockSet(const TwoBlockParams& p)
        : n_(p.n), h_(p.h), m1_(p.m1), M1_(p.M1), m2_(p.m2), M2_(p.M2), total_(p.total) {
        if (n_ == 0) throw PreconditionError("TwoBlockSet: n must be positive");
        if (h_ < 1 || h_ > n_) {
            throw PreconditionError("TwoBlockSet: first-block length h = " + std::to_string(h_) +
                                    " outside [1, " + std::to_string(n_) + "]");
        }
        if (m2_ < -kTol || M2_ < -kTol) throw PreconditionError("TwoBlockSet: negative bound");
        if (m2_ > m1_ + kTol) throw PreconditionError("TwoBlockSet: m2 > m1");
        if (M2_ > M1_ + kTol) throw PreconditionError("TwoBlockSet: M2 > M1");
        if (m1_ > M1_ + kTol) throw PreconditionError("TwoBlockSet: m1 > M1");
        if (m2_ > M2_ + kTol) throw PreconditionError("TwoBlockSet: m2 > M2");
        if (total_ < lower_sum() - kTol || total_ > upper_sum() + kTol) {
            throw InfeasibleSetError("TwoBlockSet: total " + std::to_string(total_) +
                                     " outside the feasible range [" + std::to_string(lower_sum()) +
                                     ", " + std::to_string(upper_sum()) + "]");
        }
    }

    std::size_t n() const { return n_; }
    std::size_t h() const { return h_; }
    double m1() const { return m1_; }
    double M1() const { return M1_; }
    double m2() const { return m2_; }
    double M2() const { return M2_; }
    double total() const { return total_; }

    double lower_sum() const { return static_cast<double>(h_) * m1_ + static_cast<double>(n_ - h_) * m2_; }
    double upper_sum() const { return static_cast<double>(h_) * M1_ + static_cast<double>(n_ - h_) * M2_; }

    /// Threshold at which the maximal element switches shape: the total of
    /// [M1 x h, m2 x (n-h)]. Recomputed on demand, never cached.
    double a_star() const { return static_cast<double>(h_) * M1_ + static_cast<double>(n_ - h_) * m2_; }

    /// Threshold for the minimal element: the total of [m1 x h, M2 x (n-h)].
    double a_tilde() const { return static_cast<double>(h_) * m1_ + static_cast<double>(n_ - h_) * M2_; }

    double lower_bound_at(std::size_t i) const { return i < h_ ? m1_ : m2_; }
    double upper_bound_at(std::size_t i) const { return i < h_ ? M1_ : M2_; }

    bool is_singleton(double tol = kTol) const {
        return M1_ - m1_ <= tol && M2_ - m2_ <= tol;
    }

    bool is_integral(double tol = kTol) const {
        return is_near_integer(m1_, tol) && is_near_integer(M1_, tol) &&
               is_near_integer(m2_, tol) && is_near_integer(M2_, tol) &&
               is_near_integer(total_, tol);
    }

    bool contains(const OrderedVector& x, double tol = kTol) const {
        if (x.size() != n_) return false;
        for (std::size_t i = 0; i < n_; ++i) {
            if (x[i] < lower_bound_at(i) - tol || x[i] > upper_bound_at(i) + tol) return false;
        }
        return std::abs(x.total() - total_) <= tol;
    }

    /// The same set written with per-coordinate bound vectors.
    BoxedSumSet expanded() const {
        std::vector<double> lo(n_);
        std::vector<double> hi(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            lo[i] = lower_bound_at(i);
            hi[i] = upper_bound_at(i);
        }
        return BoxedSumSet(OrderedVector(std::move(lo)), OrderedVector(std::move(hi)), total_);
    }

private:
    std::size_t n_;
    std::size_t h_;
    double m1_, M1_, m2_, M2_;
    double total_;
};

} // namespace mz
