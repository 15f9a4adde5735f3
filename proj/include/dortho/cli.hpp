#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dortho {

// Parsed command-line configuration. Rational parameters stay as "p/q"
// strings until the library boundary. Exactly one command per run.
struct RunConfig {
    std::string command;                 // gen-a | gen-b | verify | contract-a | contract-b | gf-check

    long q = 0;
    std::string c = "1";
    long N = 6;
    std::vector<long> N_list;            // contraction N grids
    long M = 1;
    std::string f = "1";
    long j = 1;
    long k = 0;
    std::string a = "1";                 // (a,b) split for contract-b
    std::string b = "1";
    double eta = 0.5;                    // gf-check sample point

    std::string format = "json";         // json | csv
    std::string out;                     // output file name; empty writes stdout
    std::uint64_t seed = 20240913;       // randomized verification sampling
    bool quick = false;                  // verify: N <= 6 tier
    long N_max = 12;                     // verify: exact-suite bound
};

// Executes the configured command. Returns the process exit status:
// 0 on success, 1 on invariant failure (first residual on stderr),
// 2 on invalid configuration.
int run(const RunConfig& config);

} // namespace dortho
