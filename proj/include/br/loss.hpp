#ifndef BR_LOSS_HPP
#define BR_LOSS_HPP

#include <algorithm>
#include <stdexcept>

namespace br {

/// Squared loss l(y, y') = (y - y')^2 / 2, optionally truncated at B^2/2.
struct LossSpec {
    enum class Kind { squared, truncated };
    Kind kind = Kind::squared;
    double B = 1.0;  // truncation scale, used iff kind == truncated

    static LossSpec squared() { return {Kind::squared, 1.0}; }
    static LossSpec truncated(double B) {
        if (B < 1.0) throw std::invalid_argument("truncation scale B must be >= 1");
        return {Kind::truncated, B};
    }

    double cap() const { return 0.5 * B * B; }

    double value(double pred, double y) const {
        double r = pred - y;
        double l = 0.5 * r * r;
        if (kind == Kind::truncated) l = std::min(l, cap());
        return l;
    }

    /// d loss / d pred, zero beyond the truncation cap.
    double derivative(double pred, double y) const {
        double r = pred - y;
        if (kind == Kind::truncated && 0.5 * r * r >= cap()) return 0.0;
        return r;
    }
};

}  // namespace br

#endif
