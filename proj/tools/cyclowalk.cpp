#include "cyclowalk/cli.hpp"

int main(int argc, char** argv) { return cyclowalk::cli::run(argc, argv); }
