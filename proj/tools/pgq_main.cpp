#include <iostream>
#include <vector>

#include "pgq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    pgq::RunConfig cfg = pgq::parse_args(args);
    return pgq::run(cfg, std::cout, std::cerr);
  } catch (const pgq::HelpRequested& h) {
    std::cout << h.text;
    return 0;
  } catch (const pgq::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
