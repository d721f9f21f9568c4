#include <aalt/cli.hpp>

int main(int argc, char** argv) { return aalt::cli::run(std::vector<std::string>(argv + 1, argv + argc)); }
