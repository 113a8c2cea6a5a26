#include "strbut/cli.hpp"

int main(int argc, char** argv) { return strbut::cli::run(argc, argv); }
