// Copyright 2026 The qhom Authors
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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qhom/qhom.hpp"

namespace {

// Exit codes: 0 success, 1 selftest failure, 2 config error,
// 3 capacity error, 4 I/O error.
constexpr int exit_config_error = 2;
constexpr int exit_capacity_error = 3;
constexpr int exit_io_error = 4;

struct OutputOptions {
  std::string out_dir = ".";
  std::string format = "csv";
  bool plot = false;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--out", opts.out_dir, "Output directory")
      ->capture_default_str();
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_flag("--plot", opts.plot, "Also emit an SVG plot");
}

void emit(const qhom::SweepResult& result, const OutputOptions& opts,
          const std::string& stem) {
  const auto files = qhom::export_result(result, opts.out_dir,
                                         qhom::parse_export_format(opts.format),
                                         stem);
  for (const auto& f : files) std::cout << "wrote " << f.string() << "\n";
  if (opts.plot) {
    for (const auto& f : qhom::plot_result(result, opts.out_dir, stem))
      std::cout << "wrote " << f.string() << "\n";
  }
}

int default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// -- selftest suites ---------------------------------------------------------

bool report(const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  return ok;
}

bool selftest_oracle_agreement(qhom::Rng& rng, int tasks) {
  using namespace qhom;
  const double etas[] = {0.12, 0.3, std::numbers::pi / 4};
  double worst = 0.0;
  for (int t = 0; t < tasks; ++t) {
    const TaskSpec task = random_task(rng, t % 2 == 0);
    const int N = 1 + t % 6;
    const SwapStrength eta(etas[t % 3]);
    const CollisionTrace dense = single_pass(task, N, eta);
    const CollisionTrace oracle = collision_recursion_oracle(task, N, eta);
    for (int k = 0; k <= N; ++k)
      worst = std::max(worst, (dense.marginals[k].matrix() -
                               oracle.marginals[k].matrix())
                                  .cwiseAbs()
                                  .maxCoeff());
  }
  return report("oracle agreement", worst < 1e-12,
                "max marginal deviation " + format_number(worst) + " over " +
                    std::to_string(tasks) + " tasks");
}

bool selftest_linalg_properties(qhom::Rng& rng, int instances) {
  using namespace qhom;
  double worst = 0.0;
  for (int t = 0; t < instances; ++t) {
    const int nq = 1 + t % 3;
    const DensityMatrix a = random_density_matrix(rng, nq);
    const DensityMatrix b = random_density_matrix(rng, nq);
    worst = std::max(worst, std::abs(fidelity(a, b) - fidelity(b, a)));
    worst = std::max(worst, std::abs(fidelity(a, a) - 1.0));
    const DensityMatrix pure = random_pure_state(rng, nq);
    const double overlap =
        (pure.matrix() * b.matrix()).trace().real();
    worst = std::max(worst, std::abs(fidelity(pure, b) - overlap));
    const ComplexMatrix root = sqrt_psd(a);
    worst = std::max(worst,
                     (root * root - a.matrix()).cwiseAbs().maxCoeff());
    const DensityMatrix joint = tensor(a, b);
    std::vector<int> first(nq);
    std::iota(first.begin(), first.end(), 0);
    worst = std::max(worst, (partial_trace(joint, first).matrix() - a.matrix())
                                .cwiseAbs()
                                .maxCoeff());
  }
  return report("linear-algebra properties", worst < 1e-9,
                "worst deviation " + format_number(worst) + " over " +
                    std::to_string(instances) + " instances");
}

bool selftest_machine_invariants(qhom::Rng& rng) {
  using namespace qhom;
  bool ok = true;
  const TaskSpec task = homogenisation_task(TaskDirection::T, 0.1);
  const SwapStrength eta(0.3);

  const MachineState ent = make_machine(task, 3, RestMode::entangled);
  const MachineState sep = make_machine(task, 3, RestMode::separable);
  const auto r_ent = use_machine(ent, task, eta);
  const auto r_sep = use_machine(sep, task, eta);
  const double sub_dev = (r_ent.substrate_out.matrix() -
                          r_sep.substrate_out.matrix())
                             .cwiseAbs()
                             .maxCoeff();
  ok &= report("entangled/separable agree at n=1", sub_dev < 1e-12,
               "substrate deviation " + format_number(sub_dev));

  const UsageSeries analytic =
      deterioration_series(task, 3, eta, 8, RestMode::analytic_approx);
  double s_dev = 0.0;
  const double s1 = analytic.records.front().steadiness;
  for (const UsageRecord& u : analytic.records)
    s_dev = std::max(s_dev, std::abs(u.steadiness - std::pow(s1, u.n)));
  ok &= report("analytic mode S_n = S_1^n", s_dev == 0.0,
               "max deviation " + format_number(s_dev));

  // Purity must be conserved by each collision (unitarity witness).
  double purity_dev = 0.0;
  for (int t = 0; t < 20; ++t) {
    DensityMatrix joint = tensor(random_density_matrix(rng, 2),
                                 random_density_matrix(rng, 1));
    const double before = purity(joint);
    joint = apply_partial_swap(joint, 0, 2, SwapStrength(0.4));
    purity_dev = std::max(purity_dev, std::abs(purity(joint) - before));
  }
  ok &= report("purity conserved per collision", purity_dev < 1e-9,
               "max drift " + format_number(purity_dev));
  return ok;
}

int run_selftest(std::uint64_t seed, int tasks) {
  qhom::Rng rng(seed);
  bool ok = true;
  ok &= selftest_oracle_agreement(rng, tasks);
  ok &= selftest_linalg_properties(rng, 200);
  ok &= selftest_machine_invariants(rng);
  std::cout << (ok ? "selftest passed" : "selftest FAILED") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Collision-model quantum homogeniser simulator"};
  app.require_subcommand(1);

  // figure3
  OutputOptions fig3_out;
  double fig3_gamma = 0.1;
  CLI::App* fig3 = app.add_subcommand(
      "figure3", "Single-pass collision traces (eta = pi/4, N = 3)");
  fig3->add_option("--gamma", fig3_gamma, "Mixedness bias of the target state")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  add_output_options(fig3, fig3_out);

  // figure4
  OutputOptions fig4_out;
  std::vector<double> fig4_etas = {0.3, 0.12};
  std::vector<int> fig4_N = qhom::default_figure4_N_list();
  int fig4_n_max = 50;
  int fig4_workers = default_workers();
  int fig4_cap = qhom::default_qubit_cap;
  CLI::App* fig4 = app.add_subcommand(
      "figure4", "Relative-deterioration sweep over (eta, N, direction, mode)");
  fig4->add_option("--eta", fig4_etas, "Swap strengths")->capture_default_str();
  fig4->add_option("--N", fig4_N, "Machine sizes")->capture_default_str();
  fig4->add_option("--n-max", fig4_n_max, "Usages per series")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  fig4->add_option("--workers", fig4_workers, "Concurrent scenario workers")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  fig4->add_option("--cap", fig4_cap, "Register qubit cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output_options(fig4, fig4_out);

  // sweep
  OutputOptions sweep_out;
  std::string sweep_config_path;
  int sweep_workers = default_workers();
  int sweep_cap_override = -1;
  CLI::App* sweep =
      app.add_subcommand("sweep", "Run a parameter sweep from a config file");
  sweep->add_option("config", sweep_config_path, "Sweep config file")
      ->required();
  sweep->add_option("--workers", sweep_workers, "Concurrent scenario workers")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_option("--cap", sweep_cap_override,
                    "Register qubit cap (overrides the config file)");
  add_output_options(sweep, sweep_out);

  // selftest
  std::uint64_t selftest_seed = 12345;
  int selftest_tasks = 100;
  CLI::App* selftest = app.add_subcommand(
      "selftest", "Run the oracle-agreement and invariant suites");
  selftest->add_option("--seed", selftest_seed, "RNG seed")
      ->capture_default_str();
  selftest->add_option("--tasks", selftest_tasks,
                       "Randomized tasks in the oracle suite")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return exit_config_error;
  }

  try {
    if (fig3->parsed()) {
      emit(qhom::run_figure3(fig3_gamma), fig3_out, "figure3");
      return 0;
    }
    if (fig4->parsed()) {
      emit(qhom::run_figure4(fig4_etas, fig4_N, fig4_n_max, fig4_workers,
                             fig4_cap),
           fig4_out, "figure4");
      return 0;
    }
    if (sweep->parsed()) {
      std::ifstream in(sweep_config_path);
      if (!in)
        throw qhom::io_error("cannot open sweep config '" + sweep_config_path +
                             "'");
      qhom::SweepSpec spec = qhom::parse_sweep_config(in);
      if (sweep_cap_override > 0) spec.capacity_cap = sweep_cap_override;
      emit(qhom::run_sweep(spec, sweep_workers), sweep_out, "sweep");
      return 0;
    }
    if (selftest->parsed()) return run_selftest(selftest_seed, selftest_tasks);
  } catch (const qhom::parse_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return exit_config_error;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return exit_config_error;
  } catch (const qhom::capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return exit_capacity_error;
  } catch (const qhom::io_error& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return exit_io_error;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return exit_io_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
