#include "run_config.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>

#include "fif/partition.hpp"

namespace fifit {

namespace {

std::vector<double> parse_number_list(const std::string& text, const char* what) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string token = text.substr(pos, comma - pos);
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (token.empty() || end != token.c_str() + token.size() || !std::isfinite(v)) {
      throw UsageError(std::string("malformed ") + what + " list near '" + token + "'");
    }
    values.push_back(v);
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return values;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig cfg;
  std::string nodes_text;
  std::string scales_text = "0";
  std::size_t uniform_n = 0;

  CLI::App app{"Best continuous fractal approximation of a target function:\n"
               "builds the cardinal fractal-interpolation basis on a partition,\n"
               "minimizes the collage residual in L2, and writes coefficients,\n"
               "exact graph samples, and a JSON report."};
  app.add_option("--a", cfg.a, "Interval left endpoint")->capture_default_str();
  app.add_option("--b", cfg.b, "Interval right endpoint")->capture_default_str();
  auto* opt_n = app.add_option("--n", uniform_n, "Uniform partition segment count");
  auto* opt_nodes =
      app.add_option("--nodes", nodes_text, "Explicit comma-separated node list");
  app.add_option("--s", scales_text,
                 "Vertical scaling: scalar broadcast or per-segment comma list")
      ->capture_default_str();
  app.add_option("--target", cfg.target_spec,
                 "Target: sin|cos|exp|abs|runge|poly:c0,c1,...|csv:FILE")
      ->required();
  app.add_option("--quad-panels", cfg.quad.panels, "Quadrature panels per segment")
      ->capture_default_str();
  app.add_option("--quad-points", cfg.quad.points, "Gauss-Legendre points per panel")
      ->capture_default_str();
  app.add_option("--depth", cfg.eval.depth, "Address-grid sampling depth")
      ->capture_default_str();
  app.add_option("--out-coeffs", cfg.out_coeffs, "Coefficient CSV path")
      ->capture_default_str();
  app.add_option("--out-samples", cfg.out_samples, "Graph sample CSV path")
      ->capture_default_str();
  app.add_option("--out-report", cfg.out_report, "JSON report path")
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "Worker cap for assembly")
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.push_back("fifit");
  for (const std::string& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if ((opt_n->count() > 0) == (opt_nodes->count() > 0)) {
    throw UsageError("exactly one of --n or --nodes is required");
  }
  if (opt_n->count() > 0) {
    cfg.uniform_segments = uniform_n;
  } else {
    cfg.nodes = parse_number_list(nodes_text, "node");
  }

  std::vector<double> scales = parse_number_list(scales_text, "scale");
  for (double s : scales) {
    if (!(std::abs(s) < 1.0)) throw UsageError("|s| must be < 1");
  }

  // Constructing the components is the validation.
  try {
    const fif::Partition p =
        cfg.nodes ? fif::build_partition(cfg.a, cfg.b, *cfg.nodes)
                  : fif::build_partition(cfg.a, cfg.b, *cfg.uniform_segments);
    if (scales.size() == 1) {
      scales.assign(p.segments(), scales.front());
    } else if (scales.size() != p.segments()) {
      throw UsageError("scale list length " + std::to_string(scales.size()) +
                       " does not match segment count " + std::to_string(p.segments()));
    }
    cfg.scales = std::move(scales);
    fif::ScaleVector sv(cfg.scales);
    cfg.quad.validate();
    cfg.eval.validate();
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (cfg.threads < 1) throw UsageError("--threads must be >= 1");
  if (cfg.target_spec.empty()) throw UsageError("missing target");
  return cfg;
}

}  // namespace fifit
