#include <csignal>
#include <iostream>

#include "cli.hpp"

namespace {

extern "C" void on_interrupt(int) { nm::cli::stop_requested = true; }

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGINT, on_interrupt);
  std::signal(SIGTERM, on_interrupt);
  return nm::cli::run_cli(argc, argv, std::cout, std::cerr);
}
