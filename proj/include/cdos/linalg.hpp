#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace cdos {

/// Coordinate vector in R^n. Dimension is fixed per problem.
using Vector = std::vector<double>;

double dot(const Vector& a, const Vector& b);
double norm(const Vector& v);
double distance(const Vector& a, const Vector& b);

Vector difference(const Vector& a, const Vector& b);  // a - b
Vector scaled(const Vector& v, double s);
Vector plus_scaled(const Vector& x, double t, const Vector& u);  // x + t*u

// v / ||v||; throws DegenerateSet when ||v|| < 1e-12.
Vector normalized(const Vector& v);

Vector axis_vector(std::size_t n, std::size_t i);

// Ordered set of n unit search directions u_1..u_n.
struct DirectionSet {
    std::vector<Vector> dirs;

    DirectionSet() = default;
    explicit DirectionSet(std::size_t n);  // coordinate axes

    std::size_t size() const { return dirs.size(); }
    Vector& operator[](std::size_t i) { return dirs[i]; }
    const Vector& operator[](std::size_t i) const { return dirs[i]; }

    // (u_1, u_2, ..., u_n) -> (u_2, ..., u_n, u_1)
    void rotate_left();

    bool all_unit(double tol = 1e-12) const;
};

// Modified Gram-Schmidt. Returns an orthonormal set spanning the inputs in
// order; the i-th output is orthogonal to the first i-1 inputs. Throws
// DegenerateSet when an intermediate vector drops below norm 1e-12.
std::vector<Vector> gram_schmidt(const std::vector<Vector>& vs);

// Thin Q of the Householder QR of the matrix whose columns are `columns`.
// span(q_1..q_j) = span(c_1..c_j) for every j. Throws DegenerateSet when a
// pivot magnitude falls below 1e-12 (rank deficiency).
std::vector<Vector> householder_qr(const std::vector<Vector>& columns);

// Last column of the QR basis of (dirs | probe): a unit vector orthogonal to
// every direction in `dirs`. Throws DegenerateSet when the probe is linearly
// dependent on `dirs`; the caller retries with a replacement probe.
Vector orthogonal_shift_direction(std::span<const Vector> dirs, const Vector& probe);

}  // namespace cdos
