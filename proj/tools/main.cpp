#include "cli.hpp"

int main(int argc, char** argv) { return scp::cli::main(argc, argv); }
