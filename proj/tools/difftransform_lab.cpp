#include "dtlab/experiments.hpp"

int main(int argc, char** argv) { return dtlab::run_cli(argc, argv); }
