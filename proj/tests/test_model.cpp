#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "kuranet/errors.hpp"
#include "kuranet/graph.hpp"
#include "kuranet/model.hpp"
#include "kuranet/rng.hpp"

using kuranet::Ensemble;
using kuranet::Graph;
using kuranet::RngStream;
using kuranet::rhs_meanfield;
using kuranet::rhs_network;

namespace {

constexpr double pi = std::numbers::pi;

// O(n^2) reference evaluations, straight from the definitions.
std::vector<double> brute_network(const Graph& g, const std::vector<double>& theta,
                                  const std::vector<double>& omega, double k) {
    std::vector<double> d(theta.size());
    for (int i = 0; i < g.n(); ++i) {
        double acc = 0.0;
        for (auto j : g.neighbors(i)) acc += std::sin(theta[j] - theta[i]);
        d[i] = omega[i] + (k / g.degree(i)) * acc;
    }
    return d;
}

std::vector<double> brute_meanfield(const std::vector<double>& theta,
                                    const std::vector<double>& omega, double k) {
    const int n = static_cast<int>(theta.size());
    std::vector<double> d(theta.size());
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < n; ++j) acc += std::sin(theta[j] - theta[i]);
        d[i] = omega[i] + (k / n) * acc;
    }
    return d;
}

Ensemble random_ensemble(int n, std::uint64_t seed) {
    RngStream fs = RngStream(seed).derive(1);
    RngStream ps = RngStream(seed).derive(2);
    return kuranet::init_ensemble(n, fs, ps);
}

Graph complete(int n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
    for (std::uint32_t u = 0; u + 1 < static_cast<std::uint32_t>(n); ++u) {
        for (std::uint32_t v = u + 1; v < static_cast<std::uint32_t>(n); ++v) {
            e.push_back({u, v});
        }
    }
    return Graph::from_edges(n, std::move(e));
}

}  // namespace

TEST_CASE("init_ensemble draws the documented distributions") {
    RngStream fs = RngStream(404).derive(1);
    RngStream ps = RngStream(404).derive(2);
    Ensemble e = kuranet::init_ensemble(1000, fs, ps);
    REQUIRE(e.n() == 1000);
    REQUIRE(e.omega.size() == 1000);

    double mean = 0.0;
    for (double w : e.omega) mean += w;
    mean /= e.n();
    double var = 0.0;
    for (double w : e.omega) var += (w - mean) * (w - mean);
    double sd = std::sqrt(var / e.n());
    CHECK(std::abs(mean) < 0.01);         // se = 0.1/sqrt(1000) ~ 3e-3
    CHECK(std::abs(sd - 0.1) < 0.01);

    for (double t : e.theta) {
        REQUIRE(t >= 0.0);
        REQUIRE(t < 2 * pi);
    }
}

TEST_CASE("initial phases cover the circle uniformly") {
    RngStream fs = RngStream(405).derive(1);
    RngStream ps = RngStream(405).derive(2);
    Ensemble e = kuranet::init_ensemble(10000, fs, ps);
    int bins[8] = {0};
    for (double t : e.theta) {
        int b = static_cast<int>(t / (2 * pi) * 8);
        REQUIRE(b >= 0);
        REQUIRE(b < 8);
        ++bins[b];
    }
    // binomial(10^4, 1/8): mean 1250, sigma ~ 33; allow 5 sigma
    for (int b : bins) CHECK(std::abs(b - 1250) < 165);
}

TEST_CASE("sigma zero collapses all frequencies to the mean") {
    RngStream fs = RngStream(1).derive(1);
    RngStream ps = RngStream(1).derive(2);
    Ensemble e = kuranet::init_ensemble(50, fs, ps, 0.25, 0.0);
    for (double w : e.omega) REQUIRE(w == 0.25);
}

TEST_CASE("init_ensemble validation") {
    RngStream fs(1), ps(1);
    CHECK_THROWS_AS((void)kuranet::init_ensemble(0, fs, ps), kuranet::InvalidParameterError);
    CHECK_THROWS_AS((void)kuranet::init_ensemble(10, fs, ps, 0.0, -0.1),
                    kuranet::InvalidParameterError);
}

TEST_CASE("reseeding phases never perturbs frequencies") {
    RngStream fs1 = RngStream(42).derive(1);
    RngStream ps1 = RngStream(42).derive(2);
    Ensemble a = kuranet::init_ensemble(100, fs1, ps1);

    RngStream fs2 = RngStream(42).derive(1);
    RngStream ps2 = RngStream(43).derive(2);  // different phase seed
    Ensemble b = kuranet::init_ensemble(100, fs2, ps2);

    REQUIRE(a.omega == b.omega);  // bitwise
    CHECK(a.theta != b.theta);
}

TEST_CASE("zero coupling leaves every oscillator at its natural frequency") {
    Ensemble e = random_ensemble(40, 7);
    RngStream gs = RngStream(7).derive(0);
    Graph g = kuranet::gen_er(40, 0.3, gs);
    if (!kuranet::is_connected(g)) return;  // isolated node would (rightly) throw
    auto d = rhs_network(g, e.theta, e.omega, 0.0);
    REQUIRE(d == e.omega);  // bitwise: the coupling term must vanish exactly
    auto dm = rhs_meanfield(e.theta, e.omega, 0.0);
    REQUIRE(dm == e.omega);
}

TEST_CASE("two coupled oscillators a quarter turn apart") {
    Graph g = Graph::from_edges(2, {{0, 1}});
    std::vector<double> theta = {0.0, pi / 2};
    std::vector<double> omega = {0.0, 0.0};
    auto d = rhs_network(g, theta, omega, 1.0);
    CHECK(d[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(d[1] == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("identical phases make the coupling vanish identically") {
    std::vector<double> theta(30, 1.234), omega(30, 0.05);
    auto d = rhs_meanfield(theta, omega, 0.8);
    for (double v : d) REQUIRE(v == doctest::Approx(0.05).epsilon(1e-15));

    Graph g = complete(30);
    auto dn = rhs_network(g, theta, omega, 0.8);
    for (double v : dn) REQUIRE(v == doctest::Approx(0.05).epsilon(1e-15));
}

TEST_CASE("degree-weighted frequency sum is conserved by the coupling") {
    // sum_i k_i * dtheta_i == sum_i k_i * omega_i because each edge
    // contributes antisymmetric terms
    RngStream gs = RngStream(88).derive(0);
    Graph g = kuranet::gen_connected_at_threshold(20, gs);
    Ensemble e = random_ensemble(20, 88);
    auto d = rhs_network(g, e.theta, e.omega, 0.7);
    double lhs = 0.0, rhs = 0.0, scale = 0.0;
    for (int i = 0; i < 20; ++i) {
        lhs += g.degree(i) * d[i];
        rhs += g.degree(i) * e.omega[i];
        scale += std::abs(g.degree(i) * e.omega[i]);
    }
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + scale));
}

TEST_CASE("mean-field coupling conserves the plain frequency sum") {
    Ensemble e = random_ensemble(33, 19);
    auto d = rhs_meanfield(e.theta, e.omega, 0.9);
    double lhs = 0.0, rhs = 0.0;
    for (int i = 0; i < 33; ++i) {
        lhs += d[i];
        rhs += e.omega[i];
    }
    CHECK(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("isolated node is rejected: its normalization divides by zero") {
    Graph g = Graph::from_edges(3, {{0, 1}});
    std::vector<double> theta = {0.1, 0.2, 0.3}, omega = {0.0, 0.0, 0.0};
    CHECK_THROWS_AS((void)rhs_network(g, theta, omega, 1.0),
                    kuranet::DegenerateDegreeError);
    try {
        (void)rhs_network(g, theta, omega, 1.0);
    } catch (const kuranet::DegenerateDegreeError& err) {
        CHECK(err.node == 2);
    }
}

TEST_CASE("rhs length validation") {
    Graph g = Graph::from_edges(2, {{0, 1}});
    std::vector<double> theta = {0.0, 1.0}, omega = {0.0};
    CHECK_THROWS_AS((void)rhs_network(g, theta, omega, 1.0),
                    kuranet::InvalidParameterError);
    std::vector<double> theta3 = {0.0, 1.0, 2.0};
    CHECK_THROWS_AS((void)rhs_network(g, theta3, omega, 1.0),
                    kuranet::InvalidParameterError);
    CHECK_THROWS_AS((void)rhs_meanfield(theta, omega, 1.0),
                    kuranet::InvalidParameterError);
}

TEST_CASE("network evaluation matches the O(n^2) definition") {
    const int n = 50;
    Ensemble e = random_ensemble(n, 301);
    RngStream gs = RngStream(301).derive(0);
    Graph g = kuranet::gen_connected_at_threshold(n, gs);
    auto fast = rhs_network(g, e.theta, e.omega, 0.6);
    auto ref = brute_network(g, e.theta, e.omega, 0.6);
    for (int i = 0; i < n; ++i) {
        CHECK(fast[i] == doctest::Approx(ref[i]).epsilon(1e-12));
    }
}

TEST_CASE("complete-graph fast path matches the edge-loop definition") {
    const int n = 50;
    Ensemble e = random_ensemble(n, 302);
    Graph g = complete(n);
    auto fast = rhs_network(g, e.theta, e.omega, 0.45);
    auto ref = brute_network(g, e.theta, e.omega, 0.45);
    for (int i = 0; i < n; ++i) {
        CHECK(fast[i] == doctest::Approx(ref[i]).epsilon(1e-12));
    }
}

TEST_CASE("mean-field evaluation matches the O(n^2) definition") {
    const int n = 50;
    Ensemble e = random_ensemble(n, 303);
    auto fast = rhs_meanfield(e.theta, e.omega, 0.6);
    auto ref = brute_meanfield(e.theta, e.omega, 0.6);
    for (int i = 0; i < n; ++i) {
        CHECK(fast[i] == doctest::Approx(ref[i]).epsilon(1e-12));
    }
}

TEST_CASE("complete graph with rescaled coupling reproduces the mean-field form") {
    // (K'/(n-1)) sum == (K/n) sum when K' = K (n-1)/n; with K = 1.25 and
    // n = 10 both scale factors are exactly 0.125, so the match is bitwise
    const int n = 10;
    Ensemble e = random_ensemble(n, 304);
    Graph g = complete(n);
    auto net = rhs_network(g, e.theta, e.omega, 1.25 * (n - 1) / static_cast<double>(n));
    auto mf = rhs_meanfield(e.theta, e.omega, 1.25);
    REQUIRE(net == mf);

    // generic K: equal up to rounding
    auto net2 = rhs_network(g, e.theta, e.omega, 0.7 * (n - 1) / static_cast<double>(n));
    auto mf2 = rhs_meanfield(e.theta, e.omega, 0.7);
    for (int i = 0; i < n; ++i) {
        CHECK(net2[i] == doctest::Approx(mf2[i]).epsilon(1e-13));
    }
}

TEST_CASE("rotational equivariance") {
    const int n = 25;
    Ensemble e = random_ensemble(n, 305);
    RngStream gs = RngStream(305).derive(0);
    Graph g = kuranet::gen_connected_at_threshold(n, gs);
    auto base = rhs_network(g, e.theta, e.omega, 0.5);
    std::vector<double> shifted = e.theta;
    for (auto& t : shifted) t += 1.9;
    auto moved = rhs_network(g, shifted, e.omega, 0.5);
    for (int i = 0; i < n; ++i) {
        CHECK(moved[i] == doctest::Approx(base[i]).epsilon(1e-12));
    }
}

TEST_CASE("odd symmetry: negating state and frequencies negates the field") {
    const int n = 25;
    Ensemble e = random_ensemble(n, 306);
    RngStream gs = RngStream(306).derive(0);
    Graph g = kuranet::gen_connected_at_threshold(n, gs);
    auto base = rhs_network(g, e.theta, e.omega, 0.5);
    std::vector<double> nt = e.theta, nw = e.omega;
    for (auto& t : nt) t = -t;
    for (auto& w : nw) w = -w;
    auto neg = rhs_network(g, nt, nw, 0.5);
    for (int i = 0; i < n; ++i) {
        CHECK(neg[i] == doctest::Approx(-base[i]).epsilon(1e-12));
    }
}
