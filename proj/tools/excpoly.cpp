#include "excpoly/cli.hpp"

int main(int argc, char** argv) { return excpoly::cli::run(argc, argv); }
