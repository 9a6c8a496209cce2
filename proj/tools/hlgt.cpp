#include "hlgt/cli.hpp"

int main(int argc, char** argv) { return hlgt::cli::run(argc, argv); }
