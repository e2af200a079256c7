#include "aerolink/cli.hpp"

int main(int argc, char** argv) { return aerolink::cli::cli_main(argc, argv); }
