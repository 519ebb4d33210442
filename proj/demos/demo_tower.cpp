#include "ziq/core.hpp"
int main() { return 0; }
