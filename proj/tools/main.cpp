#include <iostream>

int main() {
    std::cout << "symcode: subcommands land here as the modules come online\n";
    return 0;
}
