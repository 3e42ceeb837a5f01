#include "switchsep/cli.hpp"

int main(int argc, char** argv) { return switchsep::cli::run(argc, argv); }
