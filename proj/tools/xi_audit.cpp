#include "xi_audit/cli/run.hpp"

int main(int argc, char** argv) { return xi_audit::cli::run(argc, argv); }
