#include "bdlrpc/harness.hpp"

int main(int argc, char** argv) { return bdlrpc::run_cli(argc, argv); }
