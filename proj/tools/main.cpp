#include "cli.hpp"

int main(int argc, char** argv) { return spectrunc::cli::run(argc, argv); }
