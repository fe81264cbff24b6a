#include "mzq/cli.hpp"

int main(int argc, char** argv) { return mzq::cli::run(argc, argv); }
