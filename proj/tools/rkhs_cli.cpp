#include "rkhs/cli.hpp"

int main(int argc, char** argv) { return rkhs::cli_main(argc, argv); }
