#include "supercoinv/cli.hpp"

int main(int argc, char** argv) { return supercoinv::cli_main(argc, argv); }
