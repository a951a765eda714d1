#include <iostream>

#include "cli.hh"

int main(int argc, char** argv)
{
  return omega::tools::run_cli(argc, argv, std::cout, std::cerr);
}
