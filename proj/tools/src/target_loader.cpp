#include "target_loader.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace fifit {

namespace {

std::vector<double> parse_coefficients(const std::string& text) {
  std::vector<double> coeffs;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (token.empty() || end != token.c_str() + token.size()) {
      throw std::runtime_error("malformed polynomial coefficient '" + token + "'");
    }
    coeffs.push_back(v);
  }
  if (coeffs.empty()) throw std::runtime_error("poly target needs coefficients");
  return coeffs;
}

bool parse_field(const std::string& token, double& out) {
  char* end = nullptr;
  out = std::strtod(token.c_str(), &end);
  return !token.empty() && end == token.c_str() + token.size();
}

fif::TargetFunction load_csv(const std::string& path, double a, double b) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open sample file '" + path + "'");

  std::vector<double> xs;
  std::vector<double> ys;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::stringstream fields(line);
    std::string fx, fy;
    if (!std::getline(fields, fx, ',') || !std::getline(fields, fy)) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": expected two comma-separated columns");
    }
    double x = 0.0;
    double y = 0.0;
    if (!parse_field(fx, x) || !parse_field(fy, y)) {
      if (line_no == 1) continue;  // header row
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": cannot parse '" + line + "'");
    }
    xs.push_back(x);
    ys.push_back(y);
  }
  if (xs.size() < 2) {
    throw std::runtime_error(path + ": need at least two samples");
  }
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (!(xs[i] < xs[i + 1])) {
      throw std::runtime_error(path + ": x column must be strictly increasing (row " +
                               std::to_string(i + 2) + ")");
    }
  }
  if (xs.front() > a || xs.back() < b) {
    throw std::runtime_error(path + ": samples cover [" + std::to_string(xs.front()) +
                             ", " + std::to_string(xs.back()) +
                             "] but the interval is [" + std::to_string(a) + ", " +
                             std::to_string(b) + "]");
  }

  auto interp = [xs = std::move(xs), ys = std::move(ys)](double x) {
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    std::size_t i = static_cast<std::size_t>(it - xs.begin());
    i = std::clamp<std::size_t>(i, 1, xs.size() - 1);
    const double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return (1.0 - t) * ys[i - 1] + t * ys[i];
  };
  return fif::TargetFunction{std::move(interp), "csv:" + path};
}

}  // namespace

fif::TargetFunction load_target(const std::string& spec, double a, double b) {
  if (spec == "sin") return {[](double x) { return std::sin(x); }, spec};
  if (spec == "cos") return {[](double x) { return std::cos(x); }, spec};
  if (spec == "exp") return {[](double x) { return std::exp(x); }, spec};
  if (spec == "abs") return {[](double x) { return std::abs(x); }, spec};
  if (spec == "runge") {
    return {[](double x) { return 1.0 / (1.0 + 25.0 * x * x); }, spec};
  }
  if (spec.starts_with("poly:")) {
    auto coeffs = parse_coefficients(spec.substr(5));
    auto horner = [coeffs = std::move(coeffs)](double x) {
      double v = 0.0;
      for (std::size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
      return v;
    };
    return {std::move(horner), spec};
  }
  if (spec.starts_with("csv:")) return load_csv(spec.substr(4), a, b);
  throw std::runtime_error("unknown target '" + spec +
                           "' (expected sin|cos|exp|abs|runge|poly:...|csv:FILE)");
}

}  // namespace fifit
