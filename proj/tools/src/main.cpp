#include "bqlp_cli/cli.hpp"

int main(int argc, char** argv) { return bqlp::cli::cli_main(argc, argv); }
