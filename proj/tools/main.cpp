#include <exception>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  try {
    const covergame::cli::Command cmd =
        covergame::cli::parse_args({argv + 1, argv + argc});
    covergame::cli::run_command(cmd, std::cin, std::cout, std::cerr);
    return 0;
  } catch (const covergame::cli::UsageError& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return 2;
  } catch (const covergame::Error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
