#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qrec {

using cplx = std::complex<double>;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
    double norm2() const { return x * x + y * y; }
    // counterclockwise rotation by 90 degrees
    Vec2 rot90() const { return {-y, x}; }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

// Error taxonomy. Each module throws the narrowest category that applies;
// the CLI maps categories to exit codes.
class Error : public std::runtime_error {
public:
    Error(std::string stage, const std::string& msg)
        : std::runtime_error("[" + stage + "] " + msg), stage_(std::move(stage)) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

class ConfigError : public Error {
public:
    ConfigError(const std::string& stage, const std::string& msg) : Error(stage, msg) {}
};

class ShapeError : public Error {
public:
    ShapeError(const std::string& stage, const std::string& msg) : Error(stage, msg) {}
};

class TopologyError : public Error {
public:
    TopologyError(const std::string& stage, const std::string& msg) : Error(stage, msg) {}
};

class StabilityError : public Error {
public:
    StabilityError(const std::string& stage, const std::string& msg) : Error(stage, msg) {}
};

class ConditioningError : public Error {
public:
    ConditioningError(const std::string& stage, const std::string& msg) : Error(stage, msg) {}
};

// Newton divergence; carries the residual history for diagnostics.
class SolverError : public Error {
public:
    SolverError(const std::string& stage, const std::string& msg, std::vector<double> history = {})
        : Error(stage, msg), residual_history(std::move(history)) {}
    std::vector<double> residual_history;
};

class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& stage, const std::string& msg) : Error(stage, msg) {}
};

class InternalError : public Error {
public:
    InternalError(const std::string& stage, const std::string& msg) : Error(stage, msg) {}
};

// FNV-1a, used for config hashing and seed derivation.
inline std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ull) {
    std::uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::uint64_t hash_mix(std::uint64_t a, std::uint64_t b) {
    // splitmix64-style mixing of two words
    std::uint64_t z = a + 0x9e3779b97f4a7c15ull + b;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Thread-count knob shared by OpenMP regions and Eigen products.
// n <= 0 means "use all available cores".
void set_num_threads(int n);
int num_threads();

}  // namespace qrec
