#include "resample/cli.hpp"

int main(int argc, char** argv) { return resample::cli::cli_main(argc, argv); }
