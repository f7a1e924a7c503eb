#include "cli.hpp"

int main(int argc, char** argv) {
  try {
    const auto plan = satotate::cli::parse(argc, argv);
    return satotate::cli::run(plan);
  } catch (const satotate::cli::UsageError& e) {
    (e.code == 0 ? std::cout : std::cerr) << e.what() << "\n";
    return e.code;
  }
}
