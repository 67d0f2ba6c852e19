#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "unpol/analysis.hpp"
#include "unpol/state_file.hpp"
#include "unpol/version.hpp"

namespace unpol::cli {

using nlohmann::ordered_json;

namespace {

constexpr int kMaxCommutantManifold = 12;

// Input problems that map to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MakeOptions {
  std::string kind;
  std::optional<int> n_max;
  std::optional<double> mean;
  std::string weights;
  std::string amplitudes;
  std::string fock;
  bool normalize = false;
  std::string label;
  std::string out;
};

struct CheckOptions {
  std::string state;
  double tol = kDefaultTolerance;
  int trials = 100;
  std::uint64_t seed = 0;
  std::string out;
};

struct MomentsOptions {
  std::string state;
  int order = 1;
  std::string out;
};

struct CommutantOptions {
  int n_min = 0;
  int n_max = 0;
};

struct TransformOptions {
  std::string state;
  std::vector<double> angles;
  std::optional<std::uint64_t> random;
  std::optional<std::uint64_t> random_lossless;
  std::string out;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

double parse_double(const std::string& token) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    throw InputError("not a number: '" + token + "'");
  }
  if (used != token.size()) throw InputError("not a number: '" + token + "'");
  return value;
}

int parse_int(const std::string& token) {
  const double v = parse_double(token);
  if (v != static_cast<int>(v)) throw InputError("not an integer: '" + token + "'");
  return static_cast<int>(v);
}

std::vector<double> parse_weights(const std::string& text) {
  std::vector<double> out;
  for (const auto& t : split(text, ',')) out.push_back(parse_double(t));
  return out;
}

// "re" or "re:im"
Complex parse_amplitude(const std::string& token) {
  const auto parts = split(token, ':');
  if (parts.size() == 1) return {parse_double(parts[0]), 0.0};
  if (parts.size() == 2) return {parse_double(parts[0]), parse_double(parts[1])};
  throw InputError("amplitude must be 're' or 're:im', got '" + token + "'");
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write " + path);
  file << text;
}

StateFile load(const std::string& path) {
  try {
    return read_state_file(path);
  } catch (const StateFileError& e) {
    throw InputError(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------

DensityOperator make_pure(const MakeOptions& o, std::ostream& err) {
  Vector amplitudes;
  if (!o.fock.empty()) {
    if (!o.amplitudes.empty()) throw InputError("give either --fock or --amplitudes");
    const auto parts = split(o.fock, ',');
    if (parts.size() != 2) throw InputError("--fock expects n_a,n_b");
    const ModeOccupation occ{parse_int(parts[0]), parse_int(parts[1])};
    if (occ.n_a < 0 || occ.n_b < 0) throw InputError("occupations must be nonnegative");
    const int n_max = o.n_max.value_or(occ.total());
    if (n_max < occ.total()) throw InputError("--n-max is below the number state");
    amplitudes = Vector::Zero(static_cast<Eigen::Index>(truncated_dimension(n_max)));
    amplitudes(static_cast<Eigen::Index>(flat_index(occ))) = 1.0;
  } else if (!o.amplitudes.empty()) {
    const auto tokens = split(o.amplitudes, ',');
    amplitudes.resize(static_cast<Eigen::Index>(tokens.size()));
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      amplitudes(static_cast<Eigen::Index>(i)) = parse_amplitude(tokens[i]);
    }
  } else {
    throw InputError("pure states need --fock or --amplitudes");
  }
  if (o.normalize) {
    const double norm = amplitudes.norm();
    if (!(norm > 0.0)) throw InputError("cannot normalize a zero vector");
    amplitudes /= norm;
  }
  const PureDensity pd = pure_density(PureStateVector(amplitudes));
  if (pd.coherences_discarded) {
    err << "warning: coherences between photon-number manifolds were discarded\n";
  }
  return pd.rho;
}

DensityOperator make_state(const MakeOptions& o, std::ostream& err) {
  if (o.kind == "vacuum") {
    std::vector<double> w(static_cast<std::size_t>(o.n_max.value_or(0)) + 1, 0.0);
    w[0] = 1.0;
    return unpolarized_state(ManifoldWeights(std::move(w)));
  }
  if (o.kind == "thermal") {
    if (!o.mean) throw InputError("thermal states need --mean");
    if (!o.n_max) throw InputError("thermal states need --n-max");
    return thermal_state(*o.mean, *o.n_max);
  }
  if (o.kind == "unpolarized") {
    if (o.weights.empty()) throw InputError("unpolarized states need --weights");
    std::vector<double> w = parse_weights(o.weights);
    if (o.n_max) {
      if (static_cast<std::size_t>(*o.n_max) + 1 < w.size()) {
        throw InputError("more weights than manifolds up to --n-max");
      }
      w.resize(static_cast<std::size_t>(*o.n_max) + 1, 0.0);
    }
    return unpolarized_state(ManifoldWeights(std::move(w)));
  }
  if (o.kind == "pure") return make_pure(o, err);
  throw InputError("unknown kind '" + o.kind + "'");
}

int cmd_make(const MakeOptions& o, std::ostream& out, std::ostream& err) {
  if (o.n_max && *o.n_max < 0) throw InputError("--n-max must be nonnegative");
  const DensityOperator rho = make_state(o, err);
  emit(serialize_state(rho, o.label.empty() ? o.kind : o.label), o.out, out);
  return kUnpolarized;
}

ordered_json header(const char* command) {
  ordered_json doc;
  doc["tool"] = "unpol";
  doc["version"] = kVersion;
  doc["command"] = command;
  return doc;
}

int cmd_check(const CheckOptions& o, std::ostream& out) {
  if (!(o.tol > 0.0)) throw InputError("--tol must be positive");
  if (o.trials < 1) throw InputError("--trials must be at least 1");
  const StateFile file = load(o.state);
  const DensityOperator& rho = file.rho;

  const UnpolarizationReport report = is_unpolarized(rho, o.tol);
  const double threshold = invariance_threshold(rho.n_max(), o.tol);
  const MonteCarloResult linear =
      monte_carlo_invariance(rho, o.trials, o.seed, TransformFamily::Linear);
  const MonteCarloResult general =
      monte_carlo_invariance(rho, o.trials, o.seed, TransformFamily::General);
  const DensityDiagnostics diag = validate(rho);

  ordered_json doc = header("check");
  doc["state"] = o.state;
  if (!file.label.empty()) doc["label"] = file.label;
  doc["n_max"] = rho.n_max();
  doc["seed"] = o.seed;
  doc["trials"] = o.trials;
  doc["tolerance"] = o.tol;
  doc["verdict"] = report.verdict;

  ordered_json scalar;
  scalar["verdict"] = report.block_scalar_verdict;
  scalar["residuals"] = report.block_scalar_residuals;
  doc["block_scalar"] = std::move(scalar);

  ordered_json comm;
  comm["verdict"] = report.commutator_verdict;
  ordered_json norms = ordered_json::array();
  for (const auto& row : report.commutator_norms) {
    norms.push_back(ordered_json::array({row[0], row[1], row[2]}));
  }
  comm["norms"] = std::move(norms);
  doc["commutators"] = std::move(comm);

  ordered_json mc;
  mc["threshold"] = threshold;
  mc["linear"] = {{"max_deviation", linear.max_deviation},
                  {"verdict", linear.max_deviation <= threshold}};
  mc["general"] = {{"max_deviation", general.max_deviation},
                   {"verdict", general.max_deviation <= threshold}};
  doc["monte_carlo"] = std::move(mc);

  ordered_json density;
  density["hermiticity_residual"] = diag.hermiticity_residual;
  density["min_eigenvalue"] = diag.min_eigenvalue;
  density["trace_residual"] = diag.trace_residual;
  density["truncation_deficit"] = rho.truncation_deficit();
  doc["density"] = std::move(density);

  emit(canonical_json(doc), o.out, out);
  return report.verdict ? kUnpolarized : kPolarized;
}

int cmd_moments(const MomentsOptions& o, std::ostream& out) {
  if (o.order < 1 || o.order > kMaxMomentOrder) {
    throw InputError("--order must be between 1 and " + std::to_string(kMaxMomentOrder));
  }
  const StateFile file = load(o.state);
  const MomentTensor tensor = stokes_moment_tensor(file.rho, o.order);

  ordered_json doc = header("moments");
  doc["state"] = o.state;
  doc["order"] = o.order;
  ordered_json entries = ordered_json::array();
  for (std::size_t i = 0; i < tensor.size(); ++i) {
    const Complex v = tensor.entries()[i];
    ordered_json e;
    e["index"] = tensor.indices_of(i);
    e["value"] = ordered_json::array({v.real(), v.imag()});
    entries.push_back(std::move(e));
  }
  doc["entries"] = std::move(entries);
  emit(canonical_json(doc), o.out, out);
  return kUnpolarized;
}

int cmd_commutant(const CommutantOptions& o, std::ostream& out) {
  if (o.n_min < 0 || o.n_max < o.n_min || o.n_max > kMaxCommutantManifold) {
    throw InputError("commutant range must satisfy 0 <= n-min <= n-max <= " +
                     std::to_string(kMaxCommutantManifold));
  }
  int anomalies = 0;
  out << "n\tdimension\n";
  for (int n = o.n_min; n <= o.n_max; ++n) {
    const int dim = commutant_dimension(n);
    out << n << '\t' << dim;
    if (dim != 1) {
      out << "\tANOMALY";
      ++anomalies;
    }
    out << '\n';
  }
  out << "anomalies: " << anomalies << '\n';
  return anomalies == 0 ? kUnpolarized : kPolarized;
}

int cmd_transform(const TransformOptions& o, std::ostream& out) {
  const int chosen = (o.angles.empty() ? 0 : 1) + (o.random ? 1 : 0) +
                     (o.random_lossless ? 1 : 0);
  if (chosen != 1) {
    throw InputError("give exactly one of --angles, --random, --random-lossless");
  }
  const StateFile file = load(o.state);
  const int n_max = file.rho.n_max();
  const LosslessUnitary u =
      !o.angles.empty() ? evolution({o.angles[0], o.angles[1], o.angles[2]}, n_max)
      : o.random        ? haar_random_su2(*o.random, n_max)
                        : random_lossless(*o.random_lossless, n_max);
  emit(serialize_state(transformed(file.rho, u), file.label), o.out, out);
  return kUnpolarized;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-mode polarization algebra and unpolarized-light checks", "unpol"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  MakeOptions make;
  auto* make_cmd = app.add_subcommand("make", "Write a state file");
  make_cmd->add_option("kind", make.kind, "vacuum | thermal | unpolarized | pure")
      ->required()
      ->check(CLI::IsMember({"vacuum", "thermal", "unpolarized", "pure"}));
  make_cmd->add_option("--n-max", make.n_max, "Highest photon-number manifold");
  make_cmd->add_option("--mean", make.mean, "Thermal mean photon number per mode");
  make_cmd->add_option("--weights", make.weights, "Comma-separated r_0,r_1,...");
  make_cmd->add_option("--amplitudes", make.amplitudes,
                       "Comma-separated re or re:im in flat basis order");
  make_cmd->add_option("--fock", make.fock, "Number state n_a,n_b");
  make_cmd->add_flag("--normalize", make.normalize, "Rescale amplitudes to unit norm");
  make_cmd->add_option("--label", make.label, "Label stored in metadata");
  make_cmd->add_option("--out", make.out, "Output path (default: stdout)");

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Test a state for unpolarization");
  check_cmd->add_option("state", check.state, "State file")->required();
  check_cmd->add_option("--tol", check.tol, "Base tolerance, scaled by n+1 per block")
      ->capture_default_str();
  check_cmd->add_option("--trials", check.trials, "Monte-Carlo trials per family")
      ->capture_default_str();
  check_cmd->add_option("--seed", check.seed, "Random seed")->required();
  check_cmd->add_option("--out", check.out, "Report path (default: stdout)");

  MomentsOptions moments;
  auto* moments_cmd = app.add_subcommand("moments", "Stokes moment tensor of a state");
  moments_cmd->add_option("state", moments.state, "State file")->required();
  moments_cmd->add_option("--order", moments.order, "Moment order (1..6)")->required();
  moments_cmd->add_option("--out", moments.out, "Output path (default: stdout)");

  CommutantOptions commutant;
  auto* commutant_cmd =
      app.add_subcommand("commutant", "Dimension of the rotation/phase commutant per manifold");
  commutant_cmd->add_option("--n-min", commutant.n_min, "First manifold")->capture_default_str();
  commutant_cmd->add_option("--n-max", commutant.n_max, "Last manifold (<= 12)")->required();

  TransformOptions transform;
  auto* transform_cmd = app.add_subcommand("transform", "Apply a lossless unitary");
  transform_cmd->add_option("state", transform.state, "State file")->required();
  transform_cmd->add_option("--angles", transform.angles, "phi1 phi2 phi3")->expected(3);
  transform_cmd->add_option("--random", transform.random, "Haar-random SU(2) seed");
  transform_cmd->add_option("--random-lossless", transform.random_lossless,
                            "Independent Haar-random block seed");
  transform_cmd->add_option("--out", transform.out, "Output path (default: stdout)");

  std::vector<const char*> argv;
  argv.push_back("unpol");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (*make_cmd) return cmd_make(make, out, err);
    if (*check_cmd) return cmd_check(check, out);
    if (*moments_cmd) return cmd_moments(moments, out);
    if (*commutant_cmd) return cmd_commutant(commutant, out);
    if (*transform_cmd) return cmd_transform(transform, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace unpol::cli
