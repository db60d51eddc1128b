#include <iostream>
int main() { std::cout << "minigraph placeholder\n"; return 0; }
