#include "landauer/experiments.hpp"

int main(int argc, char** argv) { return landauer::cli::cli_main(argc, argv); }
