#include "cli.hpp"

int main(int argc, char** argv) { return fpi::cli::run(argc, argv); }
