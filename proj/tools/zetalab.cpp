// Batch CLI: build tables, run the verification suites, emit CSV/JSON.
// Subcommands are wired in cli_run(); see README for the schemas.

#include <cstdio>

int main(int, char**) {
    std::fprintf(stderr, "zetalab: CLI under construction\n");
    return 2;
}
