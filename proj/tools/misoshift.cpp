#include "misoshift/cli.hpp"

int main(int argc, char** argv) { return misoshift::run_cli(argc, argv); }
