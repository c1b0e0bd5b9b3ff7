// CLI stub; subcommands are wired up once the library is in place.
int main() { return 0; }
