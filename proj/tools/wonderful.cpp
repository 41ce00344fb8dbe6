#include "wonderful/cli.hpp"

int main(int argc, char** argv) { return wonderful::cli::run(argc, argv); }
