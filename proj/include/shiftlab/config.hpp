#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace shiftlab {

struct Caps {
    std::int64_t weyl = 1000000;  // largest Weyl group we enumerate
    std::int64_t words = 10000;   // reduced-word listings
    std::int64_t grid = 10000;    // exponent-grid denominators
};

// Process-wide limits; set once at startup (CLI flags or SHIFTLAB_CAPS), read everywhere.
Caps& caps();

// "weyl=N,words=N,grid=N" with any subset of keys.
Caps parse_caps(const std::string& spec, Caps base);

class SizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Worker threads for the OpenMP kernels; 0 leaves the runtime default.
void set_threads(int n);
int threads();

}  // namespace shiftlab
