#include "charprod/cli.hpp"

int main(int argc, char** argv) { return charprod::cli_main(argc, argv); }
