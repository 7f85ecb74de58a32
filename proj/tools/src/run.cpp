#include "run.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "fif/fif.hpp"
#include "target_loader.hpp"

namespace fifit {

namespace {

// 17 significant digits: values survive a text round trip unchanged.
std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

// Report values are rounded to 12 significant digits before serialization.
double report_number(double v) {
  if (!std::isfinite(v) || v == 0.0) return v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return std::strtod(buf, nullptr);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  return out;
}

}  // namespace

int run(const RunConfig& cfg) {
  const fif::Partition p =
      cfg.nodes ? fif::build_partition(cfg.a, cfg.b, *cfg.nodes)
                : fif::build_partition(cfg.a, cfg.b, *cfg.uniform_segments);
  const fif::ScaleVector s(cfg.scales);
  const fif::TargetFunction target = load_target(cfg.target_spec, cfg.a, cfg.b);

  const fif::FitResult result =
      fif::fit(target, p, s, cfg.quad, cfg.eval, cfg.threads);

  if (!result.certificate_ok) {
    std::cerr << "warning: measured L2 error " << result.measured_l2_error
              << " exceeds the collage bound " << result.collage_bound
              << " plus slack; check quadrature settings\n";
  }

  {
    std::ofstream out = open_output(cfg.out_coeffs);
    out << "k,alpha\n";
    for (std::size_t k = 0; k < result.alpha.size(); ++k) {
      out << k << "," << csv_number(result.alpha[k]) << "\n";
    }
  }

  {
    const fif::CardinalBasis basis(p, s);
    const fif::LambdaVector combined = fif::combine(basis, result.alpha);
    const auto samples = fif::sample_fixed_point(combined, s, p, cfg.eval.depth);
    std::ofstream out = open_output(cfg.out_samples);
    out << "x,f_target,f_approx\n";
    for (const fif::Sample& sample : samples) {
      out << csv_number(sample.x) << "," << csv_number(target(sample.x)) << ","
          << csv_number(sample.value) << "\n";
    }
  }

  {
    nlohmann::ordered_json report;
    report["n"] = p.segments();
    nlohmann::ordered_json s_values = nlohmann::ordered_json::array();
    for (double v : cfg.scales) s_values.push_back(report_number(v));
    report["s"] = std::move(s_values);
    report["contraction"] = report_number(result.contraction);
    report["collage_residual"] = report_number(result.collage_residual);
    report["collage_bound"] = report_number(result.collage_bound);
    report["measured_l2_error"] = report_number(result.measured_l2_error);
    report["max_node_jump"] = report_number(result.max_node_jump);
    report["objective"] = report_number(result.objective);
    report["quad"] = {{"panels", cfg.quad.panels}, {"points", cfg.quad.points}};
    report["depth"] = cfg.eval.depth;
    std::ofstream out = open_output(cfg.out_report);
    out << report.dump(2) << "\n";
  }

  std::cout << "target " << target.label << ": N=" << p.segments()
            << " c=" << result.contraction
            << " collage_residual=" << result.collage_residual
            << " collage_bound=" << result.collage_bound
            << " measured_l2_error=" << result.measured_l2_error << "\n";
  return 0;
}

}  // namespace fifit
