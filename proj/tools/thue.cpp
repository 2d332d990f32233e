// CLI entry point; subcommands are wired up as the modules land.
#include <cstdio>

int main() {
    std::puts("thue: no subcommands wired yet");
    return 64;
}
