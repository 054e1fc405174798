// Runs the full verification suite, one line per criterion.

#include <iostream>

#include <lcsk/verify.hpp>

int main() {
    return lcsk::verify::run_and_report(std::cout) ? 0 : 1;
}
