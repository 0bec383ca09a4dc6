#include "wsod/cli.hpp"

int main(int argc, char **argv) { return wsod::cli::run_cli(argc, argv); }
