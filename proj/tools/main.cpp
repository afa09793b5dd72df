#include "hardedge/cli/commands.hpp"

int main(int argc, char** argv) { return hardedge::cli::main(argc, argv); }
