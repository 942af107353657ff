#ifndef VDT_GEOMETRY_HPP
#define VDT_GEOMETRY_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace vdt {

// Thrown on malformed user input (bad config, unreadable file, site outside
// grid, ...). The CLI maps this to exit code 1.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when an internal invariant is violated (cycle in the incidence DAG,
// odd sign-change count, ...). Not a user error.
struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& msg) : std::runtime_error(msg) {}
};

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    Point2() = default;
    Point2(double px, double py) : x(px), y(py) {}

    Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
    Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
    Point2 operator*(double s) const { return {x * s, y * s}; }
    Point2 operator/(double s) const { return {x / s, y / s}; }
    bool operator==(const Point2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point2& o) const { return !(*this == o); }
};

using Vec2 = Point2;

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm2(const Vec2& a) { return a.x * a.x + a.y * a.y; }
inline double norm(const Vec2& a) { return std::sqrt(norm2(a)); }
inline double dist(const Point2& a, const Point2& b) { return norm(a - b); }

inline bool finite(const Point2& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Axis-aligned rectangle [x0,x1] x [y0,y1].
struct Rect {
    double x0 = 0.0, y0 = 0.0, x1 = 1.0, y1 = 1.0;

    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    double diagonal() const { return std::hypot(width(), height()); }
    bool contains(const Point2& p) const {
        return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1;
    }
    Point2 clamp(const Point2& p) const {
        return {std::min(std::max(p.x, x0), x1), std::min(std::max(p.y, y0), y1)};
    }
};

// Scale-aware equality tolerance used for divergence-value ties.
inline double eps_eq(double a) { return 1e-9 * (1.0 + std::fabs(a)); }

// Symmetric 2x2 matrix (q11 q12; q12 q22).
struct Sym2 {
    double q11 = 1.0, q12 = 0.0, q22 = 1.0;

    bool spd() const { return q11 > 0.0 && q11 * q22 - q12 * q12 > 0.0; }
    Vec2 mul(const Vec2& v) const { return {q11 * v.x + q12 * v.y, q12 * v.x + q22 * v.y}; }
    double quad(const Vec2& v) const { return dot(v, mul(v)); }
    double trace() const { return q11 + q22; }
    double det() const { return q11 * q22 - q12 * q12; }

    // Eigenvalues of a symmetric 2x2; lo <= hi.
    void eigenvalues(double& lo, double& hi) const {
        double t = 0.5 * trace();
        double d = std::sqrt(std::max(0.0, t * t - det()));
        lo = t - d;
        hi = t + d;
    }
    double eigen_ratio() const {
        double lo, hi;
        eigenvalues(lo, hi);
        return hi > 0.0 ? lo / hi : 0.0;
    }
    // Principal square root of an SPD matrix: (M + sqrt(det) I) / sqrt(trace + 2 sqrt(det)).
    Sym2 sqrt_spd() const {
        double s = std::sqrt(det());
        double t = std::sqrt(trace() + 2.0 * s);
        return {(q11 + s) / t, q12 / t, (q22 + s) / t};
    }
    // Spectral norm (max |eigenvalue|) of the symmetric matrix.
    double spectral_norm() const {
        double lo, hi;
        eigenvalues(lo, hi);
        return std::max(std::fabs(lo), std::fabs(hi));
    }
    Sym2 operator-(const Sym2& o) const { return {q11 - o.q11, q12 - o.q12, q22 - o.q22}; }
};

}  // namespace vdt

#endif
