// gammaq: relative-phase entanglement functional for pure multipartite
// states. Subcommands compute gamma, its per-subset contribution profile,
// a lower bound on the supremum over local unitaries, and the POVM Fourier
// consistency check.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "gammaq/numerics.hpp"
#include "gammaq/report_json.hpp"
#include "gammaq/state_io.hpp"
#include "gammaq/zoo.hpp"

namespace {

using namespace gammaq;

struct CommonOptions {
  std::string zoo_name;
  std::string file_path;
  std::vector<std::string> norm_overrides;
  std::uint64_t seed = 0;
  int restarts = 32;
  int nodes = 8;
  bool json = false;
  std::string out_path;
};

PureState load_state(const CommonOptions& opt) {
  if (!opt.zoo_name.empty() && !opt.file_path.empty()) {
    throw ValidationError("give either --zoo or --file, not both");
  }
  if (!opt.zoo_name.empty()) {
    return zoo(opt.zoo_name, opt.seed);
  }
  if (!opt.file_path.empty()) {
    return read_state_file(opt.file_path);
  }
  throw ValidationError("need a state: --zoo <name> or --file <path>");
}

NormalizationVector load_norms(const CommonOptions& opt, int m) {
  NormalizationVector norms = NormalizationVector::uniform(std::max(m, 2));
  for (const std::string& text : opt.norm_overrides) {
    const std::size_t eq = text.find('=');
    if (eq == std::string::npos) {
      throw ValidationError("--norm expects s=value, got '" + text + "'");
    }
    int size = 0;
    double value = 0.0;
    try {
      size = std::stoi(text.substr(0, eq));
      value = std::stod(text.substr(eq + 1));
    } catch (const std::exception&) {
      throw ValidationError("--norm expects s=value, got '" + text + "'");
    }
    norms.set(size, value);
  }
  return norms;
}

void emit(const CommonOptions& opt, const std::string& payload) {
  if (opt.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(opt.out_path);
  if (!out) {
    throw ValidationError("cannot write output file '" + opt.out_path + "'");
  }
  out << payload;
}

std::string norms_summary(const NormalizationVector& norms) {
  bool all_equal = true;
  double first = norms.values().begin()->second;
  for (const auto& [size, value] : norms.values()) {
    all_equal = all_equal && value == first;
  }
  if (all_equal) {
    return "all " + format_double(first);
  }
  std::ostringstream os;
  bool sep = false;
  for (const auto& [size, value] : norms.values()) {
    os << (sep ? ", " : "") << size << "=" << format_double(value);
    sep = true;
  }
  return os.str();
}

std::string subset_text(const std::vector<int>& subset) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    os << (i ? "," : "") << subset[i];
  }
  os << "}";
  return os.str();
}

int run_gamma(const CommonOptions& opt, bool profile) {
  const PureState state = load_state(opt);
  const NormalizationVector norms = load_norms(opt, state.dims().count());
  const GammaReport report = gamma(state, norms);

  if (opt.json) {
    emit(opt, to_json(report).dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  if (profile) {
    for (const auto& [subset, value] : report.contributions) {
      const double weight = norms.at(static_cast<int>(subset.size()));
      os << "subset " << subset_text(subset) << ": " << format_double_short(value)
         << " (weighted " << format_double_short(weight * value) << ", N_"
         << subset.size() << " = " << format_double_short(weight) << ")\n";
    }
  }
  os << "gamma = " << format_double(report.gamma) << " (norms: " << norms_summary(norms)
     << ")\n";
  emit(opt, os.str());
  return 0;
}

int run_sup(const CommonOptions& opt) {
  const PureState state = load_state(opt);
  const NormalizationVector norms = load_norms(opt, state.dims().count());
  OptimizerConfig config;
  config.restarts = opt.restarts;
  config.seed = opt.seed;
  const OptResult result = optimize_gamma_sup(state, norms, config);

  if (opt.json) {
    emit(opt, to_json(result).dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  os << "gamma_sup_lower_bound = " << format_double(result.best_gamma) << " (norms: "
     << norms_summary(norms) << ")\n"
     << "restarts = " << result.per_restart_bests.size()
     << ", evaluations = " << result.evaluations << "\n"
     << "raw gamma = " << format_double(gamma(state, norms).gamma)
     << ", restart 1 (identity start) reached "
     << format_double(result.per_restart_bests.front()) << "\n";
  emit(opt, os.str());
  return 0;
}

int run_verify(const CommonOptions& opt) {
  const PureState state = load_state(opt);
  const FourierVerification v = verify_fourier_identity(state, opt.nodes, opt.seed);
  if (opt.json) {
    emit(opt, to_json(v).dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "max |gamma - 2pi|rho|| = " << format_double(v.max_abs_error) << " over "
       << v.targets << " target(s), " << v.nodes << " nodes; "
       << (v.pass ? "PASS" : "FAIL") << "\n";
    emit(opt, os.str());
  }
  return v.pass ? 0 : 2;
}

int run_zoo(const CommonOptions& opt) {
  if (opt.zoo_name.empty()) {
    std::ostringstream os;
    for (const std::string& name : zoo_names()) {
      os << name << "\n";
    }
    emit(opt, os.str());
    return 0;
  }
  const PureState state = zoo(opt.zoo_name, opt.seed);
  emit(opt, state_to_json(state).dump(2) + "\n");
  return 0;
}

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_state, bool with_norms) {
  if (with_state) {
    cmd->add_option("--zoo", opt.zoo_name, "named reference state (see 'gammaq zoo')");
    cmd->add_option("--file", opt.file_path, "state file (JSON)");
  }
  if (with_norms) {
    cmd->add_option("--norm", opt.norm_overrides,
                    "normalization override s=value, repeatable");
  }
  cmd->add_option("--seed", opt.seed, "seed for random draws");
  cmd->add_flag("--json", opt.json, "emit JSON instead of text");
  cmd->add_option("--out", opt.out_path, "write output to a file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relative-phase entanglement functional for pure multipartite states"};
  app.require_subcommand(1);

  CommonOptions opt;
  CLI::App* cmd_gamma = app.add_subcommand("gamma", "compute gamma");
  add_common(cmd_gamma, opt, true, true);
  CLI::App* cmd_profile =
      app.add_subcommand("profile", "per-subset contribution profile");
  add_common(cmd_profile, opt, true, true);
  CLI::App* cmd_sup =
      app.add_subcommand("sup", "lower bound of gamma over local unitaries");
  add_common(cmd_sup, opt, true, true);
  cmd_sup->add_option("--restarts", opt.restarts, "optimizer restarts");
  CLI::App* cmd_verify =
      app.add_subcommand("verify-povm", "POVM Fourier-coefficient consistency check");
  add_common(cmd_verify, opt, true, false);
  cmd_verify->add_option("--nodes", opt.nodes, "quadrature nodes per phase variable");
  CLI::App* cmd_zoo =
      app.add_subcommand("zoo", "list reference states or write one as a state file");
  add_common(cmd_zoo, opt, true, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (cmd_gamma->parsed()) {
      return run_gamma(opt, false);
    }
    if (cmd_profile->parsed()) {
      return run_gamma(opt, true);
    }
    if (cmd_sup->parsed()) {
      return run_sup(opt);
    }
    if (cmd_verify->parsed()) {
      return run_verify(opt);
    }
    if (cmd_zoo->parsed()) {
      return run_zoo(opt);
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ComputationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
