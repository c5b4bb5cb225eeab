#include "tbound/cli.hpp"

int main(int argc, char** argv) { return tbound::cli_main(argc, argv); }
