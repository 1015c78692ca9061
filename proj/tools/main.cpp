#include "covlab/cli.hpp"

int main(int argc, char** argv) { return covlab::cli_dispatch(argc, argv); }
