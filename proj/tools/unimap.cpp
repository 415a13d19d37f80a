#include "unimap/cli.hpp"

int main(int argc, char** argv) { return unimap::cli::main_entry(argc, argv); }
