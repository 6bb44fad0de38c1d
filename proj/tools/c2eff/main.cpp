#include "c2eff/cli.hpp"

int main(int argc, char** argv) { return c2eff::run(argc, argv); }
