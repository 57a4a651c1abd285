#include "sfh/cli.hpp"

int main(int argc, char** argv) { return sfh::cli_main(argc, argv); }
