#include <iostream>

#include "monowalk_cli/cli.hpp"

int main(int argc, char** argv) {
  return monowalk::cli::run(argc, argv, std::cout, std::cerr);
}
