#include "fracineq/harness.hpp"

int main(int argc, char** argv) { return fracineq::harness::cli_main(argc, argv); }
