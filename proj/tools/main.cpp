#include "hypspec/cli.hpp"

int main(int argc, char** argv) {
    return hypspec::cli::run(argc, argv);
}
