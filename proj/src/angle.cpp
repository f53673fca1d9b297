#include "quasigeo/angle.hpp"

namespace qg {

ExactAngle ExactAngle::of_vector(BigInt dx, BigInt dy) {
    if (dx == 0 && dy == 0) throw std::invalid_argument("zero direction has no angle");
    int q = 0;
    // Rotate clockwise until the vector lands in {x > 0, y >= 0}.
    while (!(dx > 0 && dy >= 0)) {
        BigInt nx = dy, ny = -dx;
        dx = nx;
        dy = ny;
        ++q;
    }
    return {q % 4 == 0 ? 0 : q, std::move(dx), std::move(dy)};
}

ExactAngle ExactAngle::operator+(const ExactAngle& o) const {
    int q = quarters + o.quarters;
    BigInt zx = x * o.x - y * o.y;
    BigInt zy = x * o.y + y * o.x;
    if (!(zx > 0 && zy >= 0)) {  // product angle landed in [pi/2, pi)
        BigInt nx = zy, ny = -zx;
        zx = nx;
        zy = ny;
        ++q;
    }
    return {q, std::move(zx), std::move(zy)};
}

ExactAngle ExactAngle::operator-(const ExactAngle& o) const {
    int q = quarters - o.quarters;
    BigInt zx = x * o.x + y * o.y;
    BigInt zy = y * o.x - x * o.y;
    if (zy < 0) {  // difference of fractional parts in (-pi/2, 0)
        BigInt nx = -zy, ny = zx;
        zx = nx;
        zy = ny;
        --q;
    }
    return {q, std::move(zx), std::move(zy)};
}

ExactAngle ExactAngle::mod_quarters(int k) const {
    int q = ((quarters % k) + k) % k;
    return {q, x, y};
}

int ExactAngle::compare(const ExactAngle& o) const {
    if (quarters != o.quarters) return quarters < o.quarters ? -1 : 1;
    BigInt cross = x * o.y - y * o.x;
    if (cross > 0) return -1;  // o is CCW of *this within the quadrant
    if (cross < 0) return 1;
    return 0;
}

}  // namespace qg
