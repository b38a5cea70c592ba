#include <hybridyn/cli.hpp>

int main(int argc, char** argv) { return hybridyn::cli::run(argc, argv); }
