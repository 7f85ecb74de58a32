#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "run.hpp"
#include "run_config.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  fifit::RunConfig cfg;
  try {
    cfg = fifit::parse_args(args);
  } catch (const fifit::HelpRequested& help) {
    std::cout << help.text;
    return 0;
  } catch (const fifit::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    return fifit::run(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
