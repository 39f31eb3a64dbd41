#include "zclass/cli.hpp"

int main(int argc, char** argv) { return zclass::cli::run_cli(argc, argv); }
