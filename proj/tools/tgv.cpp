#include "tgv/cli.hpp"

int main(int argc, char** argv)
{
  return tgv::cli::run(argc, argv);
}
