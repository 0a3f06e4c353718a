// Copyright 2026 The su2pol Authors
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

// su2pol command-line tool. Every subcommand prints one JSON document on
// stdout. Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 orthogonalize found no orthogonal state.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>

#include "su2pol/bases.hpp"
#include "su2pol/errors.hpp"
#include "su2pol/orbits.hpp"
#include "su2pol/polarization.hpp"
#include "su2pol/state_io.hpp"
#include "su2pol/verify.hpp"

namespace {

using su2pol::Error;
using su2pol::ErrorCode;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNotFound = 3;

struct OptimizerFlags {
  std::string grid = "48,24,48";
  int starts = 8;
  double tol = 1e-10;
  int max_iters = 500;

  void attach(CLI::App* cmd) {
    cmd->add_option("--grid", grid, "Grid points along beta,theta,alpha")
        ->capture_default_str();
    cmd->add_option("--starts", starts, "Simplex refinement starts")->capture_default_str();
    cmd->add_option("--tol", tol, "Simplex size tolerance")->capture_default_str();
    cmd->add_option("--max-iters", max_iters, "Simplex iterations per start")
        ->capture_default_str();
  }

  su2pol::OptimizerOptions options() const {
    su2pol::OptimizerOptions opts;
    std::stringstream in(grid);
    std::string item;
    int axis = 0;
    while (std::getline(in, item, ',')) {
      if (axis >= 3) break;
      try {
        size_t used = 0;
        opts.grid_counts[axis] = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw Error(ErrorCode::kInvalidOptions, "--grid expects B,T,A integers");
      }
      ++axis;
    }
    if (axis != 3 || std::getline(in, item, ',')) {
      throw Error(ErrorCode::kInvalidOptions, "--grid expects exactly three counts");
    }
    opts.refine_starts = starts;
    opts.refine_tolerance = tol;
    opts.max_iterations = max_iters;
    opts.validate();
    return opts;
  }
};

su2pol::PureState load_state(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return su2pol::parse_state(buffer.str());
  }
  return su2pol::read_state_file(path);
}

json angles_json(const su2pol::EulerAngles& a) {
  return {{"beta", a.beta}, {"theta", a.theta}, {"alpha", a.alpha}};
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int run_degree(const std::string& path, const OptimizerFlags& flags) {
  const su2pol::PolarizationResult r =
      su2pol::degree_of_polarization(load_state(path), flags.options());
  json out = {{"eta_q", r.eta_q}, {"min_overlap_mag", r.min_overlap_mag}};
  out.update(angles_json(r.argmin));
  emit(out);
  return kExitOk;
}

int run_orthogonalize(const std::string& path, const OptimizerFlags& flags) {
  const su2pol::OrthogonalizeOutcome o =
      su2pol::orthogonalize(load_state(path), flags.options());
  json out = {{"found", o.found},
              {"route", su2pol::route_name(o.route)},
              {"residual", o.result.min_overlap_mag},
              {"eta_q", o.result.eta_q},
              {"transformed_state", su2pol::state_to_json(o.result.transformed_state)}};
  out.update(angles_json(o.result.argmin));
  emit(out);
  if (!o.found) {
    std::cerr << "NotFound: best residual " << o.result.min_overlap_mag << '\n';
    return kExitNotFound;
  }
  return kExitOk;
}

int run_classify(const std::string& path, const OptimizerFlags& flags) {
  const su2pol::OrbitClass c = su2pol::classify_orbit(load_state(path), flags.options());
  json out = {{"kind", su2pol::orbit_kind_name(c.kind)},
              {"label", c.label ? json(*c.label) : json(nullptr)},
              {"witness_label", c.witness_label},
              {"witness_fidelity", c.witness_fidelity}};
  out.update(angles_json(c.witness_angles));
  emit(out);
  return kExitOk;
}

int run_transform(const std::string& path, const su2pol::EulerAngles& angles) {
  const su2pol::PureState s = load_state(path);
  emit(su2pol::state_to_json(
      su2pol::apply_unitary(su2pol::euler_unitary(s.n_photons(), angles), s)));
  return kExitOk;
}

int run_bases(int n_photons, const std::string& axis_name, const std::string& seed) {
  const su2pol::Axis axis = su2pol::parse_axis(axis_name);
  if (n_photons == 2) {
    if (seed != "default" && seed != "psi_pi4") {
      throw Error(ErrorCode::kInvalidArgument,
                  "N=2 bases are seeded by psi(pi/4); use --seed default");
    }
    emit(su2pol::basis_to_json(axis == su2pol::Axis::kZ ? su2pol::two_photon_phase_basis()
                                                        : su2pol::two_photon_rotation_basis()));
    return kExitOk;
  }
  if (n_photons == 3) {
    const su2pol::ThreePhotonSeed s =
        su2pol::parse_seed(seed == "default" ? "zeta1" : seed);
    emit(su2pol::basis_to_json(su2pol::three_photon_basis(s, axis)));
    return kExitOk;
  }
  throw Error(ErrorCode::kInvalidArgument, "bases are available for N=2 and N=3");
}

int run_legendre_zeros(int order) {
  emit(json(su2pol::legendre_zeros(order)));
  return kExitOk;
}

int run_verify() {
  bool all = true;
  json rows = json::array();
  for (const su2pol::CheckResult& r : su2pol::run_identity_suite()) {
    std::cerr << su2pol::format_check(r) << '\n';
    all = all && r.passed;
    rows.push_back({{"id", r.id},
                    {"name", r.name},
                    {"passed", r.passed},
                    {"worst", r.worst},
                    {"tolerance", r.tolerance},
                    {"detail", r.detail}});
  }
  emit({{"passed", all}, {"checks", rows}});
  return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum degree of polarization and SU(2) tools for two-mode N-photon states"};
  app.require_subcommand(1);

  std::string state_path;
  OptimizerFlags flags;
  su2pol::EulerAngles angles;
  int n_photons = 2;
  std::string axis = "z";
  std::string seed = "default";
  int order = 1;

  CLI::App* degree = app.add_subcommand("degree", "Degree of quantum polarization");
  degree->add_option("state", state_path, "State JSON file ('-' for stdin)")->required();
  flags.attach(degree);

  CLI::App* ortho = app.add_subcommand("orthogonalize", "Find U with <s|U|s> = 0");
  ortho->add_option("state", state_path, "State JSON file ('-' for stdin)")->required();
  flags.attach(ortho);

  CLI::App* classify = app.add_subcommand("classify", "Classify the SU(2) orbit");
  classify->add_option("state", state_path, "State JSON file ('-' for stdin)")->required();
  flags.attach(classify);

  CLI::App* transform = app.add_subcommand("transform", "Apply U(beta, theta, alpha)");
  transform->add_option("state", state_path, "State JSON file ('-' for stdin)")->required();
  transform->add_option("--beta", angles.beta, "radians")->capture_default_str();
  transform->add_option("--theta", angles.theta, "radians")->capture_default_str();
  transform->add_option("--alpha", angles.alpha, "radians")->capture_default_str();

  CLI::App* bases = app.add_subcommand("bases", "Complete bases from equipartition states");
  bases->add_option("-n,--n-photons", n_photons, "2 or 3")->capture_default_str();
  bases->add_option("--axis", axis, "z (phase shifts) or y (rotations)")
      ->capture_default_str();
  bases->add_option("--seed", seed, "default, zeta1 or zeta2")->capture_default_str();

  CLI::App* zeros = app.add_subcommand("legendre-zeros", "Zeros of P_m");
  zeros->add_option("order", order, "Polynomial order m >= 1")->required();

  app.add_subcommand("verify", "Run the identity checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (degree->parsed()) return run_degree(state_path, flags);
    if (ortho->parsed()) return run_orthogonalize(state_path, flags);
    if (classify->parsed()) return run_classify(state_path, flags);
    if (transform->parsed()) return run_transform(state_path, angles);
    if (bases->parsed()) return run_bases(n_photons, axis, seed);
    if (zeros->parsed()) return run_legendre_zeros(order);
    return run_verify();
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kExitInputError;
  }
}
