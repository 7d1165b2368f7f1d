#include "cwb/cli.hpp"

int main(int argc, char** argv) { return cwb::run_cli(argc, argv); }
