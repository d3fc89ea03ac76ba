#include "commands.hpp"

int main(int argc, char** argv) { return lowcore::cli::run(argc, argv); }
