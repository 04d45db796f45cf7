#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "qganlab/errors.hpp"
#include "qganlab/experiment.hpp"
#include "qganlab/validate.hpp"

namespace {

int dispatch(const std::string& mode, const std::string& config_path, const std::string& output_dir) {
  qgan::ExperimentConfig config = qgan::parse_config(config_path);
  if (!output_dir.empty()) config.output_dir = output_dir;
  return mode == "train" ? qgan::run_train(config) : qgan::run_compare(config);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adversarial training laboratory for quantum and classical generators"};
  app.require_subcommand(1);

  std::string train_config, compare_config, output_dir;
  CLI::App* train = app.add_subcommand("train", "Run one method over the configured seeds");
  train->add_option("config", train_config, "experiment config file")->required();
  train->add_option("--output-dir", output_dir, "override the configured output directory");

  CLI::App* compare = app.add_subcommand("compare", "Run the full method/lambda/seed sweep");
  compare->add_option("config", compare_config, "experiment config file")->required();
  compare->add_option("--output-dir", output_dir, "override the configured output directory");

  bool inject_non_hermitian = false;
  CLI::App* validate = app.add_subcommand("validate", "Run the invariant and oracle suite");
  validate
      ->add_flag("--inject-non-hermitian", inject_non_hermitian,
                 "test hook: corrupt one Hermiticity check input")
      ->group("");  // hidden from help

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (validate->parsed()) {
      return qgan::validate(std::cout, {.inject_non_hermitian = inject_non_hermitian});
    }
    const std::string mode = train->parsed() ? "train" : "compare";
    return dispatch(mode, train->parsed() ? train_config : compare_config, output_dir);
  } catch (const qgan::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const qgan::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
