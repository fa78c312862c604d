#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace hatlab {

// All tiling geometry lives on the triangular lattice with spacing a = 1
// (a = shortest hat edge). Internally a point is stored in Eisenstein form
// (x, y) with cartesian position (x + y/2, y*sqrt(3)/2); the public integer
// pair (p, q) = (2x + y, y) gives the position (p/2, q*sqrt(3)/2) directly.
struct LatticeCoord {
    std::int64_t p = 0;
    std::int64_t q = 0;

    friend bool operator==(const LatticeCoord&, const LatticeCoord&) = default;
    friend auto operator<=>(const LatticeCoord&, const LatticeCoord&) = default;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
};

// Eisenstein integer vector: z = x + y*w, w = exp(i*pi/3).
struct EisVec {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const EisVec&, const EisVec&) = default;
    friend auto operator<=>(const EisVec&, const EisVec&) = default;

    EisVec operator+(EisVec o) const { return {x + o.x, y + o.y}; }
    EisVec operator-(EisVec o) const { return {x - o.x, y - o.y}; }

    // |z|^2 = x^2 + xy + y^2 (exact squared length in a^2)
    std::int64_t norm2() const { return x * x + x * y + y * y; }

    // multiplication by w: rotation by 60 degrees
    EisVec rot60() const { return {-y, x + y}; }
    // complex conjugate: reflection across the x-axis
    EisVec conj() const { return {x + y, -y}; }

    Vec2 cart() const { return {double(x) + 0.5 * double(y), double(y) * 0.8660254037844386468}; }
};

inline EisVec eis_from_pq(LatticeCoord c) {
    if (((c.p - c.q) & 1) != 0)
        throw std::invalid_argument("lattice coordinate with p-q odd is not on the tiling lattice");
    return {(c.p - c.q) / 2, c.q};
}

inline LatticeCoord pq_from_eis(EisVec v) { return {2 * v.x + v.y, v.y}; }

inline Vec2 cart_of(LatticeCoord c) {
    return {0.5 * double(c.p), 0.8660254037844386468 * double(c.q)};
}

// Rigid lattice motion z -> rot60^k( mirror^m(z) ) + t.
struct Transform {
    int rot = 0;       // 0..5
    bool mirror = false;
    EisVec t{0, 0};

    EisVec linear(EisVec z) const {
        if (mirror) z = z.conj();
        for (int i = 0; i < rot; ++i) z = z.rot60();
        return z;
    }
    EisVec operator()(EisVec z) const { return linear(z) + t; }

    // this o other (apply `other` first)
    Transform compose(const Transform& o) const {
        Transform r;
        r.rot = mirror ? (rot - o.rot + 12) % 6 : (rot + o.rot) % 6;
        r.mirror = mirror != o.mirror;
        r.t = linear(o.t) + t;
        return r;
    }

    Transform inverse() const {
        Transform r;
        if (!mirror) {
            r.rot = (6 - rot) % 6;
            r.mirror = false;
        } else {
            r.rot = rot;
            r.mirror = true;
        }
        Transform lin{r.rot, r.mirror, {0, 0}};
        r.t = lin.linear({-t.x, -t.y});
        return r;
    }

    friend bool operator==(const Transform&, const Transform&) = default;
    friend auto operator<=>(const Transform&, const Transform&) = default;
};

// Exact shoelace sum over (p,q) pairs; polygon area = S * sqrt(3)/8.
// Counter-clockwise polygons give S > 0. Every hat tile has S = 64.
std::int64_t shoelace_sum(const std::vector<LatticeCoord>& poly);

// Twice the (p,q)-shoelace "cross" of vectors a, b (exact orientation test).
inline std::int64_t cross_pq(LatticeCoord a, LatticeCoord b) {
    return a.p * b.q - a.q * b.p;
}

// Exact strict point-in-polygon (crossing number). The query point is given
// scaled by 12 in (p,q) coordinates and must not lie on the boundary.
bool point_in_polygon_x12(std::int64_t px12, std::int64_t qx12,
                          const std::vector<LatticeCoord>& poly);

// Exact squared cartesian distance between lattice points, times 4
// (4*d^2 = (p1-p2)^2 + 3*(q1-q2)^2).
inline std::int64_t dist2_x4(LatticeCoord a, LatticeCoord b) {
    std::int64_t dp = a.p - b.p, dq = a.q - b.q;
    return dp * dp + 3 * dq * dq;
}

struct LatticeCoordHash {
    std::size_t operator()(const LatticeCoord& c) const {
        std::uint64_t h = std::uint64_t(c.p) * 0x9e3779b97f4a7c15ull;
        h ^= std::uint64_t(c.q) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return std::size_t(h);
    }
};

}  // namespace hatlab
