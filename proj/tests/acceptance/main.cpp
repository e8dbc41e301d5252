// Acceptance suite: one line per criterion, non-zero exit on any failure.
// Every tolerance is pinned here, next to the check it gates.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ramansim/analytic.hpp"
#include "ramansim/oracle.hpp"
#include "ramansim/revivals.hpp"
#include "ramansim/scenario.hpp"
#include "ramansim/semiclassical.hpp"
#include "ramansim/verify.hpp"

using namespace ramansim;
using std::numbers::pi;

namespace {

struct Checker {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& message) {
        if (!condition && ok) {
            ok = false;
            detail = message;
        }
    }
    void note(const std::string& text) {
        if (!detail.empty()) detail += "; ";
        detail += text;
    }
};

std::string format(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * i / (n - 1);
    return out;
}

// 1. Analytic vs truncated-space evolution for the Fock(5) x coherent(5)
//    parameter set, all three observables, 4000 points, < 1e-9, < 30 s.
void criterion_oracle_equivalence(Checker& c) {
    const auto start = std::chrono::steady_clock::now();
    Scenario s;
    s.mode1 = {FieldKind::fock, 5.0};
    s.mode2 = {FieldKind::coherent, 5.0};
    s.ratio = 1.023;
    s.delta_over_g1 = 10.0;
    s.epsilon = 1e-12;
    s.steps = 4000;
    s.observables = {ObservableKind::inversion, ObservableKind::negativity,
                     ObservableKind::linear_entropy};
    const VerifyReport report = verify_scenario(s);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    c.require(report.entries.size() == 3, "expected three observables");
    for (const auto& entry : report.entries) {
        c.note(entry.observable + " dev=" + format(entry.max_abs_deviation));
        c.require(entry.max_abs_deviation < 1e-9,
                  entry.observable + " deviation " + format(entry.max_abs_deviation) + " >= 1e-9");
    }
    c.note("runtime=" + format(elapsed.count()) + "s");
    c.require(elapsed.count() < 30.0, "runtime exceeded 30 s");
}

// 2. Eigen-splitting of every doublet (n1, n2 <= 30) equals twice the
//    Stark-shifted Rabi frequency to 1e-12.
void criterion_rabi_validation(Checker& c) {
    double worst = 0.0;
    for (const ModelParams& p :
         {ModelParams::from_ratio(1.023, 10.0), ModelParams::from_ratio(1.0, 10.0),
          ModelParams{1.0, 0.7, 25.0, 0.3, 0.9}}) {
        const oracle::BlockDecomposition blocks = oracle::build_blocks(p, 30, 30);
        for (int n1 = 1; n1 <= 30; ++n1)
            for (int n2 = 0; n2 < 30; ++n2)
                worst = std::max(worst, std::abs(blocks.splitting(n1, n2) -
                                                 2.0 * rabi_frequency(n1, n2, p) / p.g1));
    }
    c.note("worst=" + format(worst));
    c.require(worst < 1e-12, "splitting deviates from 2*rabi by " + format(worst));
}

// 3. Equal couplings: W is periodic with period 2*pi*delta/g1 to 1e-9.
void criterion_periodicity(Checker& c) {
    const ModelParams p = ModelParams::from_ratio(1.0, 10.0);
    const PhotonDistribution d1 = coherent_dist(10.5, 1e-12);
    const PhotonDistribution d2 = coherent_dist(10.1, 1e-12);
    const double period = 2.0 * pi * 10.0;
    const std::vector<double> base = linspace(0.0, period, 1000);
    std::vector<double> shifted = base;
    for (double& t : shifted) t += period;
    const std::vector<double> w0 = inversion_series(d1, d2, p, base);
    const std::vector<double> w1 = inversion_series(d1, d2, p, shifted);
    double worst = 0.0;
    for (std::size_t i = 0; i < w0.size(); ++i) worst = std::max(worst, std::abs(w1[i] - w0[i]));
    c.note("worst=" + format(worst));
    c.require(worst < 1e-9, "|W(tau+P) - W(tau)| reached " + format(worst));
}

// 4. Revival times are set by the couplings, not the field statistics: with
//    g1 = g2 the coherent(10.5) x coherent(10.1) and coherent(10.5) x
//    thermal(10.1) peak indices coincide within one grid step, and the
//    thermal revival amplitudes are strictly smaller.
void criterion_revival_statistics(Checker& c) {
    const ModelParams p = ModelParams::from_ratio(1.0, 10.0);
    const std::vector<double> grid = linspace(0.0, 2.5 * 2.0 * pi * 10.0, 4000);
    const PhotonDistribution d1 = coherent_dist(10.5, 1e-12);
    const std::vector<double> wc = inversion_series(d1, coherent_dist(10.1, 1e-12), p, grid);
    const std::vector<double> wt = inversion_series(d1, thermal_dist(10.1, 1e-12), p, grid);

    const int window = 100;
    const std::vector<int> pc = detect_revival_indices(wc, window);
    const std::vector<int> pt = detect_revival_indices(wt, window);
    c.require(pc.size() >= 3, "expected at least three coherent peaks");
    c.require(pc.size() == pt.size(), "peak counts differ");
    if (!c.ok) return;

    double mean_c = 0.0, mean_t = 0.0;
    for (std::size_t i = 0; i < wc.size(); ++i) {
        mean_c += wc[i];
        mean_t += wt[i];
    }
    mean_c /= static_cast<double>(wc.size());
    mean_t /= static_cast<double>(wt.size());

    int worst_offset = 0;
    int compared = 0;
    for (std::size_t i = 0; i < pc.size(); ++i) {
        worst_offset = std::max(worst_offset, std::abs(pc[i] - pt[i]));
        if (pc[i] == 0) continue;  // the initial transient is not a revival
        const double amp_c = std::abs(wc[pc[i]] - mean_c);
        const double amp_t = std::abs(wt[pt[i]] - mean_t);
        c.require(amp_t < amp_c, "thermal amplitude " + format(amp_t) +
                                     " not below coherent " + format(amp_c));
        ++compared;
    }
    c.note("peaks=" + std::to_string(pc.size()) + " worst_offset=" +
           std::to_string(worst_offset) + " compared=" + std::to_string(compared));
    c.require(compared >= 2, "fewer than two revival peaks after the transient");
    c.require(worst_offset <= 1, "peak indices differ by " + std::to_string(worst_offset));
}

// 5. Entanglement placement for the Fock(5) x coherent(5) run: the global
//    negativity maximum falls strictly between consecutive revival peaks of W
//    and the negativity at every revival peak stays below 25% of the maximum.
void criterion_entanglement_placement(Checker& c) {
    const ModelParams p = ModelParams::from_ratio(1.023, 10.0);
    const PhotonDistribution d1 = fock_dist(5);
    const PhotonDistribution d2 = coherent_dist(5.0, 1e-12);
    // Three rephasing windows so the bracketing revival of the late maximum
    // is on the grid.
    const double rephasing = 2.0 * pi * 10.0 / (1.023 * 1.023);
    const std::vector<double> grid = linspace(0.0, 3.0 * rephasing, 4000);
    const std::vector<double> w = inversion_series(d1, d2, p, grid);
    const std::vector<double> neg = negativity_series(5, 5.0, p, grid, 1e-12);

    const std::vector<int> peaks = detect_revival_indices(w, 100);
    c.require(peaks.size() >= 3, "need at least three revival peaks");
    if (!c.ok) return;

    std::size_t imax = 0;
    for (std::size_t i = 1; i < neg.size(); ++i)
        if (neg[i] > neg[imax]) imax = i;  // first global maximum

    bool bracketed = false;
    for (std::size_t i = 0; i + 1 < peaks.size(); ++i)
        if (static_cast<std::size_t>(peaks[i]) < imax &&
            imax < static_cast<std::size_t>(peaks[i + 1]))
            bracketed = true;
    c.note("max N=" + format(neg[imax]) + " at tau=" + format(grid[imax]));
    c.require(bracketed, "global negativity maximum is not between consecutive revival peaks");

    double worst_ratio = 0.0;
    for (int peak : peaks) worst_ratio = std::max(worst_ratio, neg[peak] / neg[imax]);
    c.note("worst peak ratio=" + format(worst_ratio));
    c.require(worst_ratio < 0.25,
              "negativity at a revival peak reached " + format(worst_ratio) + " of the maximum");
}

// 6. Classical drive at the matched ratio r'^2 = N (N = 2): complete
//    inversion, separability at full inversion, maximal negativity 1/2, and
//    exact periodicity.
void criterion_semiclassical(Checker& c) {
    const int fock_n = 2;
    const double rp = std::sqrt(2.0);
    const double period = semiclassical::period(fock_n, rp);

    // Grid holding the extremal angles (theta steps of pi/8 per period).
    double w_max = -2.0, n_max = -1.0;
    for (int j = 0; j <= 24; ++j) {
        const semiclassical::Point pt = semiclassical::evaluate(fock_n, rp, j * period / 8.0);
        w_max = std::max(w_max, pt.inversion);
        n_max = std::max(n_max, pt.negativity);
        if (std::abs(pt.inversion) > 1.0 - 1e-9)
            c.require(pt.negativity < 1e-12, "negativity " + format(pt.negativity) +
                                                 " at |W'| = " + format(pt.inversion));
    }
    c.note("max W'=" + format(w_max) + " max N'=" + format(n_max));
    c.require(std::abs(w_max - 1.0) <= 1e-12, "max W' off by " + format(w_max - 1.0));
    c.require(std::abs(n_max - 0.5) <= 1e-12, "max N' off by " + format(n_max - 0.5));

    double worst = 0.0;
    for (double tau : linspace(0.0, period, 500)) {
        const semiclassical::Point a = semiclassical::evaluate(fock_n, rp, tau);
        const semiclassical::Point b = semiclassical::evaluate(fock_n, rp, tau + period);
        worst = std::max(worst, std::abs(a.inversion - b.inversion));
        worst = std::max(worst, std::abs(a.negativity - b.negativity));
    }
    c.note("periodicity dev=" + format(worst));
    c.require(worst <= 1e-13, "periodicity deviation " + format(worst));
}

// 7. Trivial anchors at tau = 0, exactly, for every valid preset.
void criterion_trivial_anchors(Checker& c) {
    for (const std::string& name : preset_names()) {
        Scenario s = preset_scenario(name);
        s.steps = 2;
        const TimeSeries ts = run_scenario(s);
        for (const auto& [label, values] : ts.columns) {
            const double expected = label == "inversion" ? -1.0 : 0.0;
            c.require(values[0] == expected,
                      name + ": " + label + "(0) = " + format(values[0]));
        }
    }
    const ModelParams p = ModelParams::from_ratio(1.023, 10.0);
    c.require(atomic_inversion(fock_dist(5), coherent_dist(5.0), p, 0.0) == -1.0, "W(0) != -1");
    c.require(negativity(5, 5.0, p, 0.0) == 0.0, "N(0) != 0");
    c.require(linear_entropy(5, 5.0, p, 0.0) == 0.0, "zeta(0) != 0");
}

// 8. Negativity sanity: random separable atom (x) mode states give exactly 0,
//    an embedded two-qubit Bell pair gives 1/2 to 1e-12.
void criterion_negativity_sanity(Checker& c) {
    std::mt19937 rng(91);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const auto random_density = [&](int dim) {
        Eigen::MatrixXcd g(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) g(i, j) = std::complex<double>(gauss(rng), gauss(rng));
        Eigen::MatrixXcd rho = g * g.adjoint();
        rho /= rho.trace().real();
        return rho;
    };

    double worst = 0.0;
    for (int trial = 0; trial < 40; ++trial) {
        const int db = 3 + trial % 5;
        const Eigen::MatrixXcd a = random_density(2);
        const Eigen::MatrixXcd b = random_density(db);
        Eigen::MatrixXcd prod(2 * db, 2 * db);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) prod.block(i * db, j * db, db, db) = a(i, j) * b;
        const oracle::DensityMatrix rho(prod, {2, db});
        worst = std::max(worst, oracle::pt_negativity(rho, 0));
    }
    c.note("worst separable=" + format(worst));
    c.require(worst == 0.0, "separable state negativity " + format(worst));

    const int db = 8;
    Eigen::VectorXcd bell = Eigen::VectorXcd::Zero(2 * db);
    bell[0] = bell[db + 1] = std::sqrt(0.5);
    const double value = oracle::pt_negativity(oracle::DensityMatrix::from_pure(bell, {2, db}), 0);
    c.note("bell=" + format(value));
    c.require(std::abs(value - 0.5) <= 1e-12, "Bell negativity " + format(value));
}

// 9. Mode-2 Fock preparation: zero negativity at all times with large linear
//    entropy at mid-oscillation, i.e. mixedness without entanglement.
void criterion_mixedness_without_entanglement(Checker& c) {
    const ModelParams p = ModelParams::from_ratio(1.0, 10.0);
    const oracle::BlockDecomposition blocks = oracle::build_blocks(p, 3, 3);
    oracle::TruncatedState initial(3, 3);
    initial.at(0, 1, 0) = 1.0;  // |1; 1, 0>
    const int keep_pair[2] = {0, 1};
    const int keep_atom[1] = {0};

    double worst_neg = 0.0;
    for (double tau : linspace(0.0, 4.0 * pi * 10.0, 200)) {
        const oracle::TruncatedState evolved = oracle::evolve_state(initial, blocks, tau);
        worst_neg =
            std::max(worst_neg, oracle::pt_negativity(oracle::partial_trace(evolved, keep_pair), 0));
    }
    c.note("worst negativity=" + format(worst_neg));
    c.require(worst_neg < 1e-12, "negativity reached " + format(worst_neg));

    // rabi = 0.1 in scaled units; sin^2 = 1/2 at tau = pi/4 / 0.1
    const double tau_mid = 2.5 * pi;
    const oracle::TruncatedState evolved = oracle::evolve_state(initial, blocks, tau_mid);
    const double zeta =
        oracle::matrix_linear_entropy(oracle::partial_trace(evolved, keep_atom));
    c.note("zeta at mid-oscillation=" + format(zeta));
    c.require(zeta > 0.3, "linear entropy " + format(zeta) + " <= 0.3");
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<void(Checker&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "oracle equivalence (Fock(5) x coherent(5), W/N/zeta < 1e-9, < 30 s)",
         criterion_oracle_equivalence},
        {2, "doublet splitting = 2 x Stark-shifted Rabi frequency (n <= 30, 1e-12)",
         criterion_rabi_validation},
        {3, "equal couplings: inversion period 2*pi*delta (1e-9)", criterion_periodicity},
        {4, "revival times independent of mode-2 statistics (one grid step)",
         criterion_revival_statistics},
        {5, "negativity peaks mid-collapse, < 25% of max at revivals",
         criterion_entanglement_placement},
        {6, "classical drive, matched ratio: full inversion, N' in {0, 1/2}, periodic",
         criterion_semiclassical},
        {7, "trivial anchors W(0) = -1, N(0) = 0, zeta(0) = 0 (exact)",
         criterion_trivial_anchors},
        {8, "negativity sanity: separable -> 0, Bell -> 1/2", criterion_negativity_sanity},
        {9, "mode-2 Fock: zero negativity with zeta > 0.3 (mixed, not entangled)",
         criterion_mixedness_without_entanglement},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        Checker checker;
        try {
            criterion.run(checker);
        } catch (const std::exception& e) {
            checker.ok = false;
            checker.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s  %d  %s", checker.ok ? "PASS" : "FAIL", criterion.id, criterion.name);
        if (!checker.detail.empty()) std::printf("  [%s]", checker.detail.c_str());
        std::printf("\n");
        if (!checker.ok) ++failures;
    }
    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
