#include "cli.hpp"

int main(int argc, char** argv) { return tracemonoid::cli::run(argc, argv); }
