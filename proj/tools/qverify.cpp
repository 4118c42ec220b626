#include <iostream>

#include "qverify/cli.hpp"

int main(int argc, char **argv) { return qverify::run_cli(argc, argv, std::cout, std::cerr); }
