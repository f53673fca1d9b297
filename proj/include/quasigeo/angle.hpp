#pragma once

#include "quasigeo/rational.hpp"

#include <stdexcept>

namespace qg {

// An exact planar angle: value = quarters * (pi/2) + atan2(y, x), with the
// vector kept in the half-open first quadrant (x > 0, y >= 0), so the
// fractional part lies in [0, pi/2). No angle is ever converted to a float;
// comparisons reduce to integer sign tests and "<= pi" to a quarter count.
struct ExactAngle {
    int quarters = 0;
    BigInt x = 1;
    BigInt y = 0;

    static ExactAngle zero() { return {}; }

    // Angle of a nonzero integer vector, in [0, 2pi).
    static ExactAngle of_vector(BigInt dx, BigInt dy);

    // k quarter turns (k * pi/2).
    static ExactAngle right_angles(int k) { return {k, 1, 0}; }

    bool is_zero() const { return quarters == 0 && y == 0; }
    bool is_multiple_of_quarter() const { return y == 0; }

    ExactAngle operator+(const ExactAngle& o) const;
    ExactAngle operator-(const ExactAngle& o) const;

    // Reduce modulo k quarter turns (k > 0), result in [0, k * pi/2).
    ExactAngle mod_quarters(int k) const;

    // Exact total order.
    int compare(const ExactAngle& o) const;
    bool operator==(const ExactAngle& o) const { return compare(o) == 0; }
    bool operator!=(const ExactAngle& o) const { return compare(o) != 0; }
    bool operator<(const ExactAngle& o) const { return compare(o) < 0; }
    bool operator<=(const ExactAngle& o) const { return compare(o) <= 0; }
    bool operator>(const ExactAngle& o) const { return compare(o) > 0; }
    bool operator>=(const ExactAngle& o) const { return compare(o) >= 0; }

    bool leq_pi() const { return quarters < 2 || (quarters == 2 && y == 0); }
    bool lt_half_pi() const { return quarters < 1; }
};

}  // namespace qg
