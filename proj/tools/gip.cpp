#include <cstdio>
int main() { std::puts("gip: not wired yet"); return 1; }
