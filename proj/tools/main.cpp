#include "splitkit/cli.hpp"

int main(int argc, char** argv) { return splitkit::cli::main_entry(argc, argv); }
