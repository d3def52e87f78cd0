#include "renorm/cli/cli.hpp"

int main(int argc, char** argv) { return renorm::run_cli(argc, argv); }
