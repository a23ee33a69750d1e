#include "orlicz_lab/cli.hpp"

int main(int argc, char** argv) { return orlicz_lab::cli::run(argc, argv); }
