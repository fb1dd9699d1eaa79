#include <iostream>

#include "nlie/cli.hpp"

int main(int argc, char** argv) { return nlie::run({argv + 1, argv + argc}, std::cout, std::cerr); }
