#include <cmath>
#include <random>

#include <doctest.h>

#include "cdos/errors.hpp"
#include "cdos/linalg.hpp"

using namespace cdos;

namespace {

double max_abs_dot(const Vector& v, const std::vector<Vector>& others) {
    double worst = 0.0;
    for (const Vector& o : others) worst = std::max(worst, std::abs(dot(v, o)));
    return worst;
}

std::vector<Vector> random_full_rank(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<Vector> cols(n, Vector(n));
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < n; ++r) cols[c][r] = d(rng);
        cols[c][c] += 3.0;  // diagonally dominant, comfortably full rank
    }
    return cols;
}

}  // namespace

TEST_CASE("gram_schmidt on an already orthonormal pair is the identity") {
    const auto out = gram_schmidt({{1.0, 0.0}, {0.0, 1.0}});
    CHECK(out[0] == Vector{1.0, 0.0});
    CHECK(out[1] == Vector{0.0, 1.0});
}

TEST_CASE("gram_schmidt hand example") {
    const auto out = gram_schmidt({{2.0, 0.0}, {1.0, 1.0}});
    CHECK(out[0][0] == doctest::Approx(1.0));
    CHECK(out[0][1] == doctest::Approx(0.0));
    CHECK(out[1][0] == doctest::Approx(0.0));
    CHECK(out[1][1] == doctest::Approx(1.0));
}

TEST_CASE("gram_schmidt matches the direct projection formula") {
    const Vector a{1.0, 1.0, 0.0};
    const Vector b{1.0, 0.0, 1.0};
    const auto out = gram_schmidt({a, b});

    // w = b - (a.b/a.a) a, normalized
    Vector w = b;
    const double p = dot(b, a) / dot(a, a);
    for (std::size_t i = 0; i < 3; ++i) w[i] -= p * a[i];
    const Vector expected = normalized(w);

    CHECK(std::abs(dot(out[1], a)) < 1e-12);
    CHECK(norm(out[1]) == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t i = 0; i < 3; ++i) CHECK(out[1][i] == doctest::Approx(expected[i]));
}

TEST_CASE("gram_schmidt signals linear dependence") {
    CHECK_THROWS_AS(gram_schmidt({{1.0, 0.0}, {2.0, 0.0}}), DegenerateSet);
}

TEST_CASE("householder_qr reproduces identity columns up to sign") {
    const auto q = householder_qr({{1.0, 0.0}, {0.0, 1.0}});
    CHECK(std::abs(std::abs(q[0][0]) - 1.0) < 1e-14);
    CHECK(std::abs(q[0][1]) < 1e-14);
    CHECK(std::abs(std::abs(q[1][1]) - 1.0) < 1e-14);
    CHECK(std::abs(q[1][0]) < 1e-14);
}

TEST_CASE("householder_qr on the 3-4-5 example") {
    const std::vector<Vector> u{{3.0, 4.0}, {1.0, 0.0}};
    const auto q = householder_qr(u);

    CHECK(std::abs(std::abs(q[0][0]) - 0.6) < 1e-14);
    CHECK(std::abs(std::abs(q[0][1]) - 0.8) < 1e-14);
    // Q'Q = I
    CHECK(std::abs(dot(q[0], q[0]) - 1.0) < 1e-14);
    CHECK(std::abs(dot(q[1], q[1]) - 1.0) < 1e-14);
    CHECK(std::abs(dot(q[0], q[1])) < 1e-14);
    // R = Q'U upper triangular: the subdiagonal entry q2'u1 vanishes
    CHECK(std::abs(dot(q[1], u[0])) < 1e-12);
}

TEST_CASE("householder_qr orthogonality on random full-rank matrices") {
    std::mt19937_64 rng(7);
    for (std::size_t n : {2, 3, 5, 8, 13, 21, 34, 50}) {
        const auto cols = random_full_rank(rng, n);
        const auto q = householder_qr(cols);
        REQUIRE(q.size() == n);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(norm(q[i]) - 1.0) < 1e-10);
            for (std::size_t j = i + 1; j < n; ++j) CHECK(std::abs(dot(q[i], q[j])) < 1e-10);
        }
        // R stays upper triangular: q_j orthogonal to earlier columns
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t i = 0; i < j; ++i) CHECK(std::abs(dot(q[j], cols[i])) < 1e-8);
    }
}

TEST_CASE("householder_qr and gram_schmidt agree up to per-column sign") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 20; ++round) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng() % 7);
        const auto cols = random_full_rank(rng, n);
        const auto q = householder_qr(cols);
        const auto g = gram_schmidt(cols);
        for (std::size_t c = 0; c < n; ++c) {
            const double sign = dot(q[c], g[c]) >= 0.0 ? 1.0 : -1.0;
            for (std::size_t r = 0; r < n; ++r)
                CHECK(q[c][r] == doctest::Approx(sign * g[c][r]).epsilon(1e-8));
        }
    }
}

TEST_CASE("householder_qr detects rank deficiency") {
    CHECK_THROWS_AS(householder_qr({{1.0, 2.0}, {2.0, 4.0}}), DegenerateSet);
}

TEST_CASE("orthogonal_shift_direction simple plane cases") {
    const std::vector<Vector> dirs1{{1.0, 0.0}};
    const Vector q1 = orthogonal_shift_direction(dirs1, {0.0, 1.0});
    CHECK(std::abs(q1[0]) < 1e-14);
    CHECK(std::abs(std::abs(q1[1]) - 1.0) < 1e-14);

    const double s = 1.0 / std::sqrt(2.0);
    const std::vector<Vector> dirs2{{s, s}};
    const Vector q2 = orthogonal_shift_direction(dirs2, {1.0, 0.0});
    CHECK(std::abs(dot(q2, dirs2[0])) < 1e-14);
    CHECK(std::abs(std::abs(q2[0]) - s) < 1e-12);
    CHECK(std::abs(std::abs(q2[1]) - s) < 1e-12);
    CHECK(q2[0] * q2[1] < 0.0);  // proportional to (1,-1)
}

TEST_CASE("orthogonal_shift_direction is orthogonal to all inputs in R^4") {
    std::mt19937_64 rng(23);
    const auto basis = householder_qr(random_full_rank(rng, 4));
    const std::vector<Vector> dirs{basis[0], basis[1], basis[2]};
    const Vector probe = axis_vector(4, 0);

    const Vector q = orthogonal_shift_direction(dirs, probe);
    CHECK(std::abs(norm(q) - 1.0) < 1e-12);
    CHECK(max_abs_dot(q, dirs) < 1e-10);
}

TEST_CASE("orthogonal_shift_direction rejects a dependent probe") {
    const std::vector<Vector> dirs{{1.0, 0.0}};
    CHECK_THROWS_AS(orthogonal_shift_direction(dirs, {2.0, 0.0}), DegenerateSet);
}

TEST_CASE("DirectionSet starts as coordinate axes and rotates left") {
    DirectionSet d(3);
    CHECK(d.all_unit());
    CHECK(d[0] == Vector{1.0, 0.0, 0.0});
    d.rotate_left();
    CHECK(d[0] == Vector{0.0, 1.0, 0.0});
    CHECK(d[1] == Vector{0.0, 0.0, 1.0});
    CHECK(d[2] == Vector{1.0, 0.0, 0.0});
}
