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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "covbell/chsh.hpp"
#include "covbell/oracle.hpp"

namespace covbell::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitConfigError = 2,
    kExitComputeError = 3,
    kExitNoCrossing = 4,
};

enum class OutputFormat { Csv, Json };

/// Rejected command-line input.
class ConfigError : public Error {
public:
    using Error::Error;
};

struct SweepConfig {
    double beta_min = 0.0;
    double beta_max = 0.99;
    int beta_steps = 100;
    std::vector<double> deltas{1.0};
    BellKind state = BellKind::PsiMinus;
    bool covariant = true;
    bool czachor = true;
    std::optional<std::filesystem::path> output;
    OutputFormat format = OutputFormat::Csv;
};

struct SweepRow {
    double beta;
    double alpha;
    double delta;
    double omega;
    std::optional<double> chsh_covariant;
    std::optional<double> chsh_czachor;
};

inline constexpr const char* kSweepHeader = "beta,alpha,delta,omega_rad,chsh_covariant,chsh_czachor";

/// Throws ConfigError on an invalid configuration.
void validate(const SweepConfig& config);

/// Rows ascending in beta, then in the order the deltas were given. The
/// Czachor column is only defined for the singlet and stays empty otherwise.
std::vector<SweepRow> compute_sweep(const SweepConfig& config);

/// 17 significant digits, shortest exponent form where needed.
std::string format_number(double value);
std::string render_csv(const std::vector<SweepRow>& rows);
std::string render_json(const std::vector<SweepRow>& rows);

std::string render_verify_table(const VerificationSummary& summary);
std::string render_verify_json(const VerificationSummary& summary, VerifyGrid grid);

/// Writes to a temporary sibling and renames it over `path`, so readers
/// never observe a partial file.
void write_atomically(const std::filesystem::path& path, const std::string& contents);

/// Parses argv and runs one subcommand (sweep, verify, critical-beta,
/// optimize). Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace covbell::cli
