// main.cpp - process entry point for the dtrain executable
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
    return dtrain::cli::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
