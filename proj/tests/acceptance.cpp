// Copyright 2026 The covbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "covbell/chsh.hpp"
#include "covbell/errors.hpp"
#include "covbell/oracle.hpp"

using namespace covbell;
namespace fs = std::filesystem;

namespace {

constexpr double kSqrt8 = 2.0 * std::numbers::sqrt2;
constexpr double kHalfPi = std::numbers::pi / 2.0;

struct Outcome {
    bool pass = true;
    std::string detail;
};

double sech(double x) { return 1.0 / std::cosh(x); }

Vec3 random_unit(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Vec3 v;
    do {
        v = Vec3(gauss(rng), gauss(rng), gauss(rng));
    } while (v.norm() < 1e-6);
    return v.normalized();
}

Outcome frame_invariant_violation() {
    double worst = 0.0;
    for (BellKind kind : kAllBellKinds) {
        const ChshSetting axes = canonical_axes(kind);
        for (double omega : linspace(0.0, kHalfPi, 200)) {
            worst = std::max(worst, std::abs(chsh_value(kind, axes, omega).value - kSqrt8));
        }
    }
    return {worst <= 1e-10, fmt::format("max |C - 2 sqrt 2| = {:.3e} over 4 states x 200 angles (tol 1e-10)", worst)};
}

Outcome invariant_correlations() {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> beta_dist(0.0, 0.99);
    std::uniform_real_distribution<double> delta_dist(0.0, 5.0);
    std::uniform_int_distribution<int> kind_dist(0, 3);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const BellKind kind = kAllBellKinds[static_cast<std::size_t>(kind_dist(rng))];
        const MeasurementAxis a(random_unit(rng));
        const MeasurementAxis b(random_unit(rng));
        const double beta = beta_dist(rng);
        const double delta = delta_dist(rng);

        const CanonicalFrame frame = canonical_frame(beta, delta);
        const TwoQubitState boosted =
            apply_lorentz(bell_state(kind, frame.momentum_a, frame.momentum_b), frame.boost, 1.0);
        const double omega = wigner_angle_closed_form(rapidity_from_beta(beta), delta);
        const double numeric = correlation_numeric(boosted, a, b, omega);
        const double closed = correlation_closed_form(kind, a, b);
        worst = std::max(worst, std::abs(numeric - closed));
        worst = std::max(worst, oracle_expectation(kind, a, b, beta, delta).abs_error);
    }
    return {worst <= 1e-10, fmt::format("max deviation {:.3e} over 1000 random trials (tol 1e-10)", worst)};
}

Outcome boosted_state_oracle() {
    double worst = 0.0;
    double worst_fixed = 0.0;
    const auto betas = linspace(0.0, 0.99, 20);
    const auto deltas = linspace(0.0, 5.0, 20);
    for (BellKind kind : kAllBellKinds) {
        for (double beta : betas) {
            for (double delta : deltas) {
                worst = std::max(worst, oracle_boosted_state(kind, beta, delta).abs_error);
                if (kind == BellKind::PhiMinus || kind == BellKind::PsiPlus) {
                    const CanonicalFrame frame = canonical_frame(beta, delta);
                    const TwoQubitState rest = bell_state(kind, frame.momentum_a, frame.momentum_b);
                    const TwoQubitState boosted = apply_lorentz(rest, frame.boost, 1.0);
                    worst_fixed = std::max(worst_fixed, boosted.max_amplitude_deviation(rest));
                }
            }
        }
    }
    return {worst <= 1e-12 && worst_fixed <= 1e-12,
            fmt::format("max amplitude deviation {:.3e}, fixed-point deviation {:.3e} on 20x20 grid (tol 1e-12)",
                        worst, worst_fixed)};
}

Outcome wigner_angle() {
    double worst = 0.0;
    for (double beta : linspace(0.0, 0.99, 50)) {
        for (double delta : linspace(0.0, 5.0, 50)) {
            worst = std::max(worst, oracle_wigner_angle(beta, delta).abs_error);
        }
    }
    // Matrix extraction loses precision like exp(2 (alpha + delta)), so the
    // large-rapidity limit is taken on the closed form.
    const double large = wigner_angle_closed_form(12.0, 12.0);
    const double small = wigner_angle_closed_form(2.0, 1e-6);
    const double small_extracted = oracle_wigner_angle(0.9, 1e-6).brute_force;
    const double limit_error = std::max({std::abs(large - kHalfPi),
                                         std::abs(small), std::abs(small_extracted)});
    return {worst <= 1e-10 && limit_error <= 1e-3,
            fmt::format("max |closed - extracted| = {:.3e} on 50x50 (tol 1e-10); limit error {:.3e} (tol 1e-3)",
                        worst, limit_error)};
}

Outcome czachor_curve() {
    double rest_error = 0.0;
    for (double delta : linspace(0.0, 5.0, 51)) rest_error = std::max(rest_error, std::abs(czachor_chsh(0.0, delta) - kSqrt8));

    double limit_error = 0.0;
    for (double delta : {0.5, 1.0, 2.0, 3.0}) {
        const double target = 4.0 * sech(delta) * sech(delta) - 2.0;
        limit_error = std::max(limit_error, std::abs(czachor_chsh(0.999999, delta) - target));
    }

    bool decreasing = true;
    bool single_crossing = true;
    for (double delta : linspace(1.0, 5.0, 41)) {
        double previous = czachor_chsh(0.0, delta);
        int crossings = 0;
        bool above = std::abs(previous) > 2.0;
        for (int i = 1; i < 10000; ++i) {
            const double c = czachor_chsh(i / 10000.0, delta);
            decreasing = decreasing && c < previous;
            const bool now_above = std::abs(c) > 2.0;
            crossings += now_above != above ? 1 : 0;
            above = now_above;
            previous = c;
        }
        single_crossing = single_crossing && crossings == 1;
    }

    const bool pass = rest_error <= 1e-12 && limit_error <= 1e-3 && decreasing && single_crossing;
    return {pass, fmt::format("rest error {:.3e} (tol 1e-12); beta=0.999999 limit error {:.3e} (tol 1e-3); "
                              "decreasing {}; single crossing {}",
                              rest_error, limit_error, decreasing ? "yes" : "no", single_crossing ? "yes" : "no")};
}

Outcome critical_beta_check() {
    struct Expected {
        double delta;
        double beta;
    };
    // Regression constants from a 40-digit root solve.
    constexpr Expected kExpected[] = {{1.0, 0.822217872651153}, {2.0, 0.631704526515205}, {3.0, 0.559869910686903}};
    double worst_residual = 0.0;
    double worst_regression = 0.0;
    std::string values;
    for (const auto& e : kExpected) {
        const CriticalBeta found = critical_beta(e.delta);
        worst_residual = std::max(worst_residual, std::abs(std::abs(czachor_chsh(found.beta, e.delta)) - 2.0));
        worst_regression = std::max(worst_regression, std::abs(found.beta - e.beta));
        values += fmt::format(" {:.10f}", found.beta);
    }
    return {worst_residual < 1e-8 && worst_regression < 1e-9,
            fmt::format("beta_c ={}; max residual {:.3e} (tol 1e-8); regression drift {:.3e}", values,
                        worst_residual, worst_regression)};
}

Outcome optimizer_agreement() {
    double worst_gap = 0.0;
    double worst_excess = -kSqrt8;
    int failures = 0;
    for (BellKind kind : kAllBellKinds) {
        for (double omega : linspace(0.0, kHalfPi, 200)) {
            try {
                const OptimizedSetting best = optimize_axes(kind, omega);
                worst_gap = std::max(worst_gap, std::abs(best.value - best.horodecki_bound));
                worst_excess = std::max(worst_excess, best.value - kSqrt8);
            } catch (const Error&) {
                ++failures;
            }
        }
    }
    return {failures == 0 && worst_gap <= 1e-9 && worst_excess <= 1e-9,
            fmt::format("max |opt - horodecki| = {:.3e} (tol 1e-9); max excess over 2 sqrt 2 = {:.3e}; errors {}",
                        worst_gap, worst_excess, failures)};
}

int shell_status(const std::string& command) {
    const int raw = std::system(command.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

Outcome cli_determinism() {
    const fs::path dir = fs::temp_directory_path() / fmt::format("covbell_acceptance_{}", ::getpid());
    fs::create_directories(dir);
    const std::string cli = COVBELL_CLI_PATH;
    const std::string sweep = cli + " sweep --beta-min 0 --beta-max 0.99 --beta-steps 100 --delta 0.5,1,2 --output ";
    const int first = shell_status(sweep + (dir / "a.csv").string());
    const int second = shell_status(sweep + (dir / "b.csv").string());
    const std::string a = slurp(dir / "a.csv");
    const bool identical = first == 0 && second == 0 && !a.empty() && a == slurp(dir / "b.csv");
    const int verify = shell_status(cli + " verify > /dev/null");
    const int strict = shell_status(cli + " verify --tolerance 1e-16 > /dev/null");
    fs::remove_all(dir);
    return {identical && verify == 0 && strict != 0,
            fmt::format("sweep byte-identical {}; verify exit {}; verify --tolerance 1e-16 exit {}",
                        identical ? "yes" : "no", verify, strict)};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> check;
    };
    const std::vector<Criterion> criteria{
        {"frame-invariant maximal violation", frame_invariant_violation},
        {"invariant correlations", invariant_correlations},
        {"boosted-state oracle", boosted_state_oracle},
        {"wigner angle", wigner_angle},
        {"czachor curve", czachor_curve},
        {"critical beta", critical_beta_check},
        {"optimizer/horodecki agreement", optimizer_agreement},
        {"cli determinism", cli_determinism},
    };

    const auto start = std::chrono::steady_clock::now();
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        try {
            outcome = criteria[i].check();
        } catch (const std::exception& e) {
            outcome = {false, fmt::format("exception: {}", e.what())};
        }
        failed += outcome.pass ? 0 : 1;
        fmt::print("{} {}. {}: {}\n", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, outcome.detail);
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    fmt::print("{} of {} criteria passed in {:.2f} s\n", criteria.size() - static_cast<std::size_t>(failed),
               criteria.size(), seconds);
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
