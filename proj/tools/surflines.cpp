#include "surflines/cli/parse.hpp"

int main(int argc, char** argv) { return surflines::cli::main_entry(argc, argv); }
