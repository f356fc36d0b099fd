#include "ktuple/cli/run.hpp"

int main(int argc, char** argv) { return ktuple::cli::main_entry(argc, argv); }
