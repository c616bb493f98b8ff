#include <iostream>
#include <vector>

#include "fibcong/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    fibcong::cli::CliConfig config = fibcong::cli::parse_args(args);
    return fibcong::cli::run(config, std::cout, std::cerr);
  } catch (const fibcong::cli::HelpRequested& help) {
    std::cout << help.what();
    return 0;
  } catch (const fibcong::cli::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
