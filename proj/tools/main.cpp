#include "lieprobe/cli.hpp"

int main(int argc, char** argv) { return lieprobe::cli::run(argc, argv); }
