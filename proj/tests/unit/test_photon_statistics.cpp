#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "ramansim/photon_statistics.hpp"

using namespace ramansim;

namespace {

// Independent cutoff oracle: cumulative Poisson sum in extended precision via
// lgamma, no shared code with the recurrence implementation.
int coherent_cutoff_oracle(double nbar, double eps) {
    long double sum = 0.0L;
    for (int n = 0;; ++n) {
        long double p;
        if (nbar == 0.0)
            p = (n == 0) ? 1.0L : 0.0L;
        else
            p = std::exp(-static_cast<long double>(nbar) +
                         n * std::log(static_cast<long double>(nbar)) -
                         std::lgamma(static_cast<long double>(n) + 1.0L));
        sum += p;
        if (1.0L - sum < static_cast<long double>(eps)) return n;
        REQUIRE(n < 100000);
    }
}

}  // namespace

TEST_CASE("fock distribution is a point mass") {
    const PhotonDistribution vac = fock_dist(0);
    CHECK(vac.weights == std::vector<double>{1.0});
    CHECK(vac.tail_bound == 0.0);

    const PhotonDistribution five = fock_dist(5);
    CHECK(five.n_max() == 5);
    CHECK(five.weights[5] == 1.0);
    for (int n = 0; n < 5; ++n) CHECK(five.weights[n] == 0.0);

    CHECK(fock_dist(2).weights[2] == 1.0);
    CHECK_THROWS_AS(fock_dist(-1), std::invalid_argument);
}

TEST_CASE("coherent weights follow the Poisson law") {
    const PhotonDistribution vac = coherent_dist(0.0);
    CHECK(vac.n_max() == 0);
    CHECK(vac.weights[0] == 1.0);

    const PhotonDistribution one = coherent_dist(1.0);
    CHECK(one.weights[0] == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(one.weights[1] == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));

    CHECK_THROWS_AS(coherent_dist(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(coherent_dist(1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(coherent_dist(1.0, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(coherent_dist(-2.0), std::invalid_argument);
}

TEST_CASE("coherent cutoff matches the reference tail sum") {
    // nbar = 10.5 at 1e-12: the exact omitted tail is 3.19e-12 at n = 39 and
    // 8.09e-13 at n = 40, so the cutoff is 40.
    const PhotonDistribution d = coherent_dist(10.5, 1e-12);
    CHECK(d.n_max() == 40);
    CHECK(d.n_max() == coherent_cutoff_oracle(10.5, 1e-12));
    CHECK(d.weight_sum() >= 1.0 - 1e-12);
    CHECK(d.tail_bound < 1e-12);

    for (double nbar : {0.25, 2.0, 5.0, 27.5})
        CHECK(coherent_dist(nbar, 1e-12).n_max() == coherent_cutoff_oracle(nbar, 1e-12));
}

TEST_CASE("thermal weights are geometric") {
    const PhotonDistribution vac = thermal_dist(0.0);
    CHECK(vac.n_max() == 0);
    CHECK(vac.weights[0] == 1.0);
    CHECK(vac.tail_bound == 0.0);

    const PhotonDistribution one = thermal_dist(1.0);
    CHECK(one.weights[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(one.weights[1] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(one.weights[2] == doctest::Approx(0.125).epsilon(1e-15));
}

TEST_CASE("thermal cutoff solves the closed-form tail inequality") {
    // smallest n_max with (10.1/11.1)^{n_max+1} < 1e-12
    const PhotonDistribution d = thermal_dist(10.1, 1e-12);
    CHECK(d.n_max() == 292);
    const double q = 10.1 / 11.1;
    CHECK(std::pow(q, d.n_max() + 1) < 1e-12);
    CHECK(std::pow(q, d.n_max()) >= 1e-12);
}

TEST_CASE("thermal tail formula matches brute-force summation") {
    for (double nbar : {0.5, 1.0, 10.1}) {
        const PhotonDistribution d = thermal_dist(nbar, 1e-12);
        const double q = nbar / (nbar + 1.0);
        double csum = 0.0;
        for (int k = 0; k <= d.n_max(); ++k) {
            csum += d.weights[k];
            CHECK(std::abs((1.0 - csum) - std::pow(q, k + 1)) < 1e-14);
        }
    }
}

TEST_CASE("every constructed distribution is a sub-normalized measure") {
    const double eps = 1e-12;
    for (const PhotonDistribution& d :
         {coherent_dist(0.7, eps), coherent_dist(10.5, eps), coherent_dist(123.0, eps),
          thermal_dist(0.5, eps), thermal_dist(10.1, eps), fock_dist(7)}) {
        for (double p : d.weights) CHECK(p >= 0.0);
        const double missing = 1.0 - d.weight_sum();
        CHECK(missing < eps);
        CHECK(d.weight_sum() <= 1.0 + 1e-14);
        CHECK(d.weight_sum() >= 1.0 - d.tail_bound - 1e-14);
    }
}

TEST_CASE("coherent mean is truncation-limited") {
    for (double nbar : {0.3, 1.0, 5.0, 10.5, 50.0}) {
        for (double eps : {1e-12, 1e-8}) {
            const PhotonDistribution d = coherent_dist(nbar, eps);
            CHECK(std::abs(d.mean_occupation() - nbar) < 10.0 * eps * std::max(1, d.n_max()));
        }
    }
}
