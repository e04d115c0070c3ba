#include "chainspec/cli.hpp"

int main(int argc, char** argv) { return chainspec::cli::cli_main(argc, argv); }
