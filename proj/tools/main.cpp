// SPDX-License-Identifier: Apache-2.0
//
// mmblock: line-of-sight blockage analysis and simulation for mmWave networks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "mmblock/config.hpp"
#include "mmblock/errors.hpp"
#include "mmblock/runner.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

enum ExitCode : int { kOk = 0, kConfigError = 2, kInfeasible = 3, kIoError = 4 };

struct ModeArgs {
    std::string config_path;
    unsigned threads = 0;
    bool paper_scale = false;
    bool print_config = false;
    std::vector<std::string> overrides;
};

void add_mode_options(CLI::App &sub, ModeArgs &args)
{
    sub.add_option("--config,-c", args.config_path, "key=value config file");
    sub.add_option("--threads,-j", args.threads, "worker threads (0: MMBLOCK_THREADS or all cores)");
    sub.add_flag("--paper-scale", args.paper_scale, "10000 iterations over a one-hour horizon");
    sub.add_flag("--print-config", args.print_config, "echo the resolved configuration before running");
    sub.add_option("overrides", args.overrides, "key=value settings; these win over the config file");
}

} // namespace

int main(int argc, char **argv)
{
    using namespace mmblock;

    CLI::App app{"mmWave blockage analysis, simulation and planning"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "mmblock 0.1.0");

    ModeArgs args;
    struct Sub {
        const char *name;
        const char *help;
        io::Mode mode;
    };
    const Sub subs[] = {
        {"analytic-sweep", "closed-form conditional metrics over a parameter grid", io::Mode::AnalyticSweep},
        {"simulate", "Monte Carlo blockage simulation", io::Mode::Simulate},
        {"plan", "minimum BS density for a blockage target", io::Mode::Plan},
        {"compare", "paired analytic and simulated metrics with relative error", io::Mode::Compare},
    };
    std::optional<io::Mode> chosen;
    for (const auto &s : subs) {
        auto *sub = app.add_subcommand(s.name, s.help);
        add_mode_options(*sub, args);
        sub->callback([&chosen, mode = s.mode] { chosen = mode; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kConfigError;
    }

    try {
        std::vector<std::string> overrides;
        if (args.paper_scale)
            overrides.emplace_back("paper_scale=true");
        overrides.insert(overrides.end(), args.overrides.begin(), args.overrides.end());

        const io::ExperimentSpec spec = args.config_path.empty()
                                            ? io::parse_config("", overrides, chosen)
                                            : io::load_config(args.config_path, overrides, chosen);
        if (args.print_config)
            std::cout << io::render_config(spec);

        const auto summary = io::run(spec, std::cout, args.threads);
        if (summary.undefined_rows + summary.unavailable_rows > 0)
            std::cout << (summary.undefined_rows + summary.unavailable_rows)
                      << " row(s) without a value; see the status column\n";
        if (summary.infeasible_rows > 0) {
            std::cerr << "error: " << summary.infeasible_rows << " infeasible target(s)\n";
            return kInfeasible;
        }
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const InvalidParameter &e) {
        std::cerr << "invalid parameter: " << e.what() << '\n';
        return kConfigError;
    } catch (const InfeasibleTarget &e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kInfeasible;
    } catch (const IoError &e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kIoError;
    }
    return kOk;
}
