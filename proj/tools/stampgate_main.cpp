#include "stampgate/cli.hpp"

int main(int argc, char** argv) { return stampgate::cli::main(argc, argv); }
