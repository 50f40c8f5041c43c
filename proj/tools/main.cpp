#include <iostream>
#include <string>
#include <vector>

#if defined(__GLIBC__)
#include <malloc.h>
#endif

#include "llr/cli.hpp"

int main(int argc, char** argv) {
#if defined(__GLIBC__)
    // Reuse large matrix buffers across benchmark repetitions instead of
    // returning them to the OS after every free; page-fault churn would
    // otherwise dominate the timings of fast methods.
    mallopt(M_MMAP_THRESHOLD, 1 << 30);
    mallopt(M_TRIM_THRESHOLD, 1 << 30);
#endif
    std::vector<std::string> args(argv + 1, argv + argc);
    return llr::run_cli(args, std::cout, std::cerr);
}
