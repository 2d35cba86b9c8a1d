#include "phasecat/cli_runner.hpp"

int main(int argc, char** argv) { return phasecat::cli::dispatch(argc, argv); }
