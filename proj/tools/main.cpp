// textnet: word-adjacency-network features for telling real text from
// generated gibberish.
//
//   textnet template > run.json
//   textnet generate -c run.json
//   textnet ingest   -c run.json
//   textnet report   -c run.json

#include <exception>
#include <iostream>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "textnet/error.hpp"

namespace {

enum ExitCode : int { kOk = 0, kConfigError = 1, kDataError = 2, kInternalError = 3 };

}  // namespace

int main(int argc, char** argv) {
  using namespace textnet;
  CLI::App app{"Word-adjacency-network classifier for real vs generated text"};
  app.require_subcommand(1);

  std::string config_path;
  auto with_config = [&](CLI::App* sub) {
    sub->add_option("-c,--config", config_path, "Run configuration (JSON)")->required();
    return sub;
  };
  auto* tmpl = app.add_subcommand("template", "Print a config with every default spelled out");
  auto* generate = with_config(app.add_subcommand("generate", "Write a gibberish corpus and its manifest"));
  auto* ingest = with_config(app.add_subcommand("ingest", "Build the feature matrix from both manifests"));
  auto* evaluate = with_config(app.add_subcommand("evaluate", "Univariate and multivariate accuracy tables"));
  auto* relevance = with_config(app.add_subcommand("relevance", "Exhaustive subset sweep, rankings, Spearman matrix"));
  auto* pca = with_config(app.add_subcommand("pca", "Two-dimensional PCA scatter data"));
  auto* report = with_config(app.add_subcommand("report", "evaluate + relevance + pca, bundled in report.json"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (tmpl->parsed()) {
      std::cout << cli::config_template();
      return kOk;
    }
    const cli::RunConfig config = cli::load_config(config_path);
    std::clog << "config " << config.hash << " seed " << config.seed << '\n';
    if (generate->parsed()) cli::cmd_generate(config, std::clog);
    if (ingest->parsed()) cli::cmd_ingest(config, std::clog);
    if (evaluate->parsed()) cli::cmd_evaluate(config, std::clog);
    if (relevance->parsed()) cli::cmd_relevance(config, std::clog);
    if (pca->parsed()) cli::cmd_pca(config, std::clog);
    if (report->parsed()) cli::cmd_report(config, std::clog);
    return kOk;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}
