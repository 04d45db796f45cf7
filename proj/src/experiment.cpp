#include "qganlab/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "qganlab/classical.hpp"
#include "qganlab/encoding.hpp"
#include "qganlab/errors.hpp"
#include "qganlab/history_io.hpp"
#include "qganlab/metrics.hpp"

namespace qgan {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t");
  const auto end = s.find_last_not_of(" \t");
  if (begin == std::string::npos) return {};
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) items.push_back(trim(item));
  return items;
}

double parse_real(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw ConfigError(key + ": cannot parse '" + value + "' as a real number");
  }
  if (pos != value.size()) throw ConfigError(key + ": cannot parse '" + value + "' as a real number");
  return v;
}

int parse_int(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(value, &pos);
  } catch (const std::exception&) {
    throw ConfigError(key + ": cannot parse '" + value + "' as an integer");
  }
  if (pos != value.size()) throw ConfigError(key + ": cannot parse '" + value + "' as an integer");
  return v;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(value, &pos);
  } catch (const std::exception&) {
    throw ConfigError(key + ": cannot parse '" + value + "' as an unsigned integer");
  }
  if (pos != value.size() || value[0] == '-') {
    throw ConfigError(key + ": cannot parse '" + value + "' as an unsigned integer");
  }
  return v;
}

std::vector<double> parse_real_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  for (const std::string& item : split_list(value)) out.push_back(parse_real(key, item));
  if (out.empty()) throw ConfigError(key + ": empty list");
  return out;
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "n_qubits",         "target",
      "target_file",      "methods",
      "lambda_sweep",     "seeds",
      "output_dir",       "objective_mode",
      "learning_rate_g",  "learning_rate_d",
      "fd_step",          "max_iterations",
      "d_steps_per_g_step", "epsilon",
      "patience",         "lambda_g",
      "lambda_d",         "generator_ansatz",
      "discriminator_ansatz", "evolution_time",
  };
  return keys;
}

}  // namespace

ExperimentConfig parse_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path.string() + "'");

  ExperimentConfig config;
  std::set<std::string> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config syntax error at line " + std::to_string(line_no) +
                        ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("config syntax error at line " + std::to_string(line_no) +
                        ": expected 'key = value'");
    }
    if (!known_keys().contains(key)) {
      throw ConfigError("unknown config key '" + key + "' at line " + std::to_string(line_no));
    }
    if (!seen.insert(key).second) {
      throw ConfigError("duplicate config key '" + key + "' at line " + std::to_string(line_no));
    }

    TrainingConfig& t = config.training;
    if (key == "n_qubits") {
      t.n_qubits = parse_int(key, value);
    } else if (key == "target") {
      config.target_inline = parse_real_list(key, value);
    } else if (key == "target_file") {
      config.target_file = value;
    } else if (key == "methods") {
      config.methods.clear();
      for (const std::string& m : split_list(value)) {
        if (m != "classical" && m != "qgan") {
          throw ConfigError("methods: unknown method '" + m + "' (expected classical or qgan)");
        }
        if (std::find(config.methods.begin(), config.methods.end(), m) != config.methods.end()) {
          throw ConfigError("methods: duplicate entry '" + m + "'");
        }
        config.methods.push_back(m);
      }
      if (config.methods.empty()) throw ConfigError("methods: empty list");
    } else if (key == "lambda_sweep") {
      config.lambda_sweep = parse_real_list(key, value);
      for (double v : config.lambda_sweep) {
        if (v < 0.0 || !std::isfinite(v)) throw ConfigError("lambda_sweep values must be finite and >= 0");
      }
    } else if (key == "seeds") {
      config.seeds.clear();
      for (const std::string& s : split_list(value)) config.seeds.push_back(parse_u64(key, s));
      if (config.seeds.empty()) throw ConfigError("seeds: empty list");
    } else if (key == "output_dir") {
      config.output_dir = value;
    } else if (key == "objective_mode") {
      if (value == "probabilistic") {
        t.objective_mode = ObjectiveMode::kProbabilistic;
      } else if (value == "literal") {
        t.objective_mode = ObjectiveMode::kLiteral;
      } else {
        throw ConfigError("objective_mode must be 'probabilistic' or 'literal' (got '" + value + "')");
      }
    } else if (key == "learning_rate_g") {
      t.learning_rate_g = parse_real(key, value);
    } else if (key == "learning_rate_d") {
      t.learning_rate_d = parse_real(key, value);
    } else if (key == "fd_step") {
      t.fd_step = parse_real(key, value);
    } else if (key == "max_iterations") {
      t.max_iterations = parse_int(key, value);
    } else if (key == "d_steps_per_g_step") {
      t.d_steps_per_g_step = parse_int(key, value);
    } else if (key == "epsilon") {
      t.epsilon = parse_real(key, value);
    } else if (key == "patience") {
      t.patience = parse_int(key, value);
    } else if (key == "lambda_g") {
      t.lambda_g = parse_real(key, value);
    } else if (key == "lambda_d") {
      t.lambda_d = parse_real(key, value);
    } else if (key == "generator_ansatz") {
      t.generator_ansatz = value;
    } else if (key == "discriminator_ansatz") {
      t.discriminator_ansatz = value;
    } else if (key == "evolution_time") {
      t.evolution_time = parse_real(key, value);
    }
  }
  if (in.bad()) throw IoError("I/O error while reading '" + path.string() + "'");

  if (!seen.contains("n_qubits")) throw ConfigError("missing required key n_qubits");
  if (config.target_inline.has_value() == config.target_file.has_value()) {
    throw ConfigError("exactly one of 'target' or 'target_file' is required");
  }
  validate_training_config(config.training);
  // ansatz strings must parse up front so errors name the key
  try {
    parse_ansatz(config.training.generator_ansatz, config.training.n_qubits);
  } catch (const SpecError& e) {
    throw ConfigError(std::string("generator_ansatz: ") + e.what());
  }
  try {
    parse_ansatz(config.training.discriminator_ansatz, config.training.n_qubits);
  } catch (const SpecError& e) {
    throw ConfigError(std::string("discriminator_ansatz: ") + e.what());
  }
  resolve_target(config);  // validates inline targets eagerly
  return config;
}

ProbabilityVector resolve_target(const ExperimentConfig& config) {
  DatasetSpec spec;
  spec.inline_probs = config.target_inline;
  if (config.target_file) spec.sample_file = std::filesystem::path(*config.target_file);
  spec.n_qubits = config.training.n_qubits;
  try {
    return load_dataset(spec);
  } catch (const SpecError& e) {
    throw ConfigError(std::string("target: ") + e.what());
  }
}

namespace {

struct RunPlan {
  std::string method;        // "classical" or "qgan"
  std::string lambda_label;  // formatted lambda used in file names / report keys
  double lambda_g = 0.0;
  double lambda_d = 0.0;
  std::uint64_t seed = 0;
};

std::string format_lambda(double lambda) { return format_double(lambda); }

std::string method_label(const RunPlan& plan) {
  if (plan.method == "classical") return "classical";
  return "qgan_lambda_" + plan.lambda_label;
}

int execute(const ExperimentConfig& config, const std::vector<RunPlan>& plans) {
  const ProbabilityVector target = resolve_target(config);

  std::error_code ec;
  std::filesystem::create_directories(config.output_dir, ec);
  if (ec) throw IoError("cannot create output directory '" + config.output_dir.string() + "'");

  bool any_numeric_failure = false;
  std::map<std::string, MethodRuns> runs;
  for (const RunPlan& plan : plans) {
    TrainingConfig t = config.training;
    t.seed = plan.seed;
    TrainingResult result;
    if (plan.method == "classical") {
      result = train_classical(t, target);
    } else {
      t.lambda_g = plan.lambda_g;
      t.lambda_d = plan.lambda_d;
      result = train(t, target);
    }
    if (!result.error.empty()) any_numeric_failure = true;

    const std::filesystem::path csv = config.output_dir / (plan.method + "_" + plan.lambda_label +
                                                           "_" + std::to_string(plan.seed) + ".csv");
    write_history_csv(csv, result.history);
    runs[method_label(plan)].emplace_back(plan.seed, std::move(result));
  }

  const CompareReport report = build_compare_report(runs);
  write_report_json(config.output_dir / "report.json",
                    compare_report_to_json(report, target.probs(), config.training.epsilon,
                                           config.training.patience));
  return any_numeric_failure ? 2 : 0;
}

}  // namespace

int run_train(const ExperimentConfig& config) {
  if (config.methods.size() != 1) {
    throw ConfigError("train runs a single method; set methods = classical or methods = qgan");
  }
  const std::string& method = config.methods.front();
  const double label_lambda = method == "classical" ? 0.0 : config.training.lambda_g;
  std::vector<RunPlan> plans;
  for (std::uint64_t seed : config.seeds) {
    // a single-method qgan run keeps the configured lambda_g / lambda_d;
    // the file label carries lambda_g
    plans.push_back({method, format_lambda(label_lambda), config.training.lambda_g,
                     config.training.lambda_d, seed});
  }
  return execute(config, plans);
}

int run_compare(const ExperimentConfig& config) {
  std::vector<RunPlan> plans;
  for (const std::string& method : config.methods) {
    if (method == "classical") {
      for (std::uint64_t seed : config.seeds) {
        plans.push_back({method, format_lambda(0.0), 0.0, 0.0, seed});
      }
    } else {
      // the sweep sets the single lambda knob on both sides
      for (double lambda : config.lambda_sweep) {
        for (std::uint64_t seed : config.seeds) {
          plans.push_back({method, format_lambda(lambda), lambda, lambda, seed});
        }
      }
    }
  }
  return execute(config, plans);
}

}  // namespace qgan
