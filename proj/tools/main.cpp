#include "vvlab/cli.hpp"

int main(int argc, char** argv) { return vvlab::run_cli(argc, argv); }
