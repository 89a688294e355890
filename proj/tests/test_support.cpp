#include "test_support.hpp"

#include "cdos/linalg.hpp"

namespace cdos::test {

QuadraticProblem random_spd_quadratic(std::mt19937_64& rng, std::size_t n, double max_cond) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> sym(-1.0, 1.0);

    // Random orthogonal basis from the QR of a random matrix.
    std::vector<Vector> m(n, Vector(n));
    for (auto& col : m)
        for (double& v : col) v = sym(rng) + 0.01;
    std::vector<Vector> q;
    while (true) {
        try {
            q = householder_qr(m);
            break;
        } catch (...) {
            for (auto& col : m)
                for (double& v : col) v = sym(rng) + 0.01;
        }
    }

    // Log-uniform eigenvalues in [1, cond], cond in [2, max_cond].
    const double cond = std::exp(std::log(2.0) + unit(rng) * std::log(max_cond / 2.0));
    Vector eig(n);
    eig[0] = 1.0;
    eig[n - 1] = cond;
    for (std::size_t i = 1; i + 1 < n; ++i) eig[i] = std::exp(unit(rng) * std::log(cond));

    QuadraticProblem qp;
    qp.H.assign(n, Vector(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double v = 0.0;
            for (std::size_t k = 0; k < n; ++k) v += q[k][i] * eig[k] * q[k][j];
            qp.H[i][j] = v;
        }

    Vector x_star(n);
    for (double& v : x_star) v = -3.0 + 6.0 * unit(rng);
    // g = -H x*, so the minimizer is x*.
    qp.g.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) qp.g[i] -= qp.H[i][j] * x_star[j];
    qp.c = sym(rng);
    return qp;
}

}  // namespace cdos::test
