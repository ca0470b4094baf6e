// Regenerates the derivation corpus under corpus/ (see README).
#include <iostream>

int main() {
  std::cout << "corpus generator placeholder\n";
  return 0;
}
