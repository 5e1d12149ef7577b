#include <cstdio>
int main() { std::puts("vcwb: not yet wired"); return 0; }
