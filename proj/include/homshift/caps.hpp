#pragma once

#include <stdexcept>
#include <string>

namespace homshift {

// Resource limits for the enumeration and resolution oracles. All limits are
// hard errors (CapError), never silent truncation.
struct Caps {
    int max_vertices = 24;        // cover enumeration
    int max_generators = 20;      // lcm lattice / Betti oracle
    long long max_faces = 1 << 14; // faces per upper Koszul complex
    int find_order_cap = 12;      // backtracking search over generator orders
    int max_oracle_vars = 10;     // ring size gate for choosing the Betti route
    int jobs = 1;                 // worker threads for independent subcomputations
};

struct CapError : std::runtime_error {
    explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace homshift
