#include <cstdio>

int main() {
    std::puts("bisectlab: CLI under construction");
    return 0;
}
