#include "cdos/linalg.hpp"

#include <cassert>
#include <cmath>
#include <cstdlib>

#include "cdos/errors.hpp"

namespace cdos {

namespace {
constexpr double kRankTol = 1e-12;
}

double dot(const Vector& a, const Vector& b) {
    assert(a.size() == b.size());
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const Vector& v) { return std::sqrt(dot(v, v)); }

double distance(const Vector& a, const Vector& b) {
    assert(a.size() == b.size());
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

Vector difference(const Vector& a, const Vector& b) {
    assert(a.size() == b.size());
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vector scaled(const Vector& v, double s) {
    Vector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * s;
    return r;
}

Vector plus_scaled(const Vector& x, double t, const Vector& u) {
    assert(x.size() == u.size());
    Vector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + t * u[i];
    return r;
}

Vector normalized(const Vector& v) {
    const double n = norm(v);
    if (n < kRankTol) throw DegenerateSet("cannot normalize a near-zero vector");
    return scaled(v, 1.0 / n);
}

Vector axis_vector(std::size_t n, std::size_t i) {
    assert(i < n);
    Vector r(n, 0.0);
    r[i] = 1.0;
    return r;
}

DirectionSet::DirectionSet(std::size_t n) {
    dirs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) dirs.push_back(axis_vector(n, i));
}

void DirectionSet::rotate_left() {
    if (dirs.size() < 2) return;
    Vector first = std::move(dirs.front());
    for (std::size_t i = 0; i + 1 < dirs.size(); ++i) dirs[i] = std::move(dirs[i + 1]);
    dirs.back() = std::move(first);
}

bool DirectionSet::all_unit(double tol) const {
    for (const Vector& d : dirs) {
        if (std::abs(norm(d) - 1.0) > tol) return false;
    }
    return true;
}

std::vector<Vector> gram_schmidt(const std::vector<Vector>& vs) {
    std::vector<Vector> out;
    out.reserve(vs.size());
    for (const Vector& v : vs) {
        Vector w = v;
        for (const Vector& q : out) {
            const double p = dot(w, q);
            for (std::size_t i = 0; i < w.size(); ++i) w[i] -= p * q[i];
        }
        const double n = norm(w);
        if (n < kRankTol) throw DegenerateSet("gram_schmidt: linearly dependent input");
        out.push_back(scaled(w, 1.0 / n));
    }
    return out;
}

std::vector<Vector> householder_qr(const std::vector<Vector>& columns) {
    const std::size_t k = columns.size();
    if (k == 0) return {};
    const std::size_t n = columns.front().size();
    assert(k <= n);

    // Column-major working copy; reflectors stored as unit vectors v_j
    // supported on rows j..n-1:  H_j = I - 2 v_j v_j^T.
    std::vector<Vector> a = columns;
    std::vector<Vector> reflectors(k);

    for (std::size_t j = 0; j < k; ++j) {
        double colnorm = 0.0;
        for (std::size_t r = j; r < n; ++r) colnorm += a[j][r] * a[j][r];
        colnorm = std::sqrt(colnorm);
        if (colnorm < kRankTol) throw DegenerateSet("householder_qr: rank-deficient input");

        const double alpha = (a[j][j] >= 0.0) ? -colnorm : colnorm;
        Vector v(n, 0.0);
        for (std::size_t r = j; r < n; ++r) v[r] = a[j][r];
        v[j] -= alpha;
        const double vn = norm(v);
        if (vn < kRankTol) {
            // Column already aligned with e_j; identity reflector.
            v.assign(n, 0.0);
        } else {
            for (double& c : v) c /= vn;
        }
        reflectors[j] = v;

        for (std::size_t c = j; c < k; ++c) {
            const double p = dot(v, a[c]);
            for (std::size_t r = j; r < n; ++r) a[c][r] -= 2.0 * p * v[r];
        }
        if (std::abs(a[j][j]) < kRankTol)
            throw DegenerateSet("householder_qr: pivot below tolerance");
    }

    // Thin Q: apply H_0 .. H_{k-1} to the first k identity columns,
    // innermost reflector first.
    std::vector<Vector> q(k);
    for (std::size_t c = 0; c < k; ++c) {
        Vector col = axis_vector(n, c);
        for (std::size_t j = k; j-- > 0;) {
            const Vector& v = reflectors[j];
            const double p = dot(v, col);
            if (p != 0.0) {
                for (std::size_t r = 0; r < n; ++r) col[r] -= 2.0 * p * v[r];
            }
        }
        q[c] = std::move(col);
    }
    return q;
}

Vector orthogonal_shift_direction(std::span<const Vector> dirs, const Vector& probe) {
    std::vector<Vector> columns(dirs.begin(), dirs.end());
    columns.push_back(probe);
    std::vector<Vector> q = householder_qr(columns);
    return q.back();
}

}  // namespace cdos
