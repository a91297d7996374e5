#include "faithcheck/cli.hpp"

int main(int argc, char** argv) { return faithcheck::cli::run_main(argc, argv); }
