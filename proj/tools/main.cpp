#include "pfptopo/cli.hpp"

int main(int argc, char** argv) { return pfp::run_cli(argc, argv); }
