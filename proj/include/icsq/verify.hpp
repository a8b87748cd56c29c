#pragma once

#include "icsq/squares.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace icsq {

struct PropertyReport {
    std::string name;
    bool pass = true;
    std::size_t checks = 0;
    std::string detail;   // first failing witness, empty when passing
};

struct VerifyOptions {
    uint64_t seed = 0;
    int random_pairs = 200;            // Leibniz / niceness random draws
    std::vector<Perversity> perversities;   // defaulted per complex when empty
    bool corrupt_cup = false;          // test hook: breaks one cup term
};

/// Runs the relation suite on one complex: Leibniz, niceness,
/// top-commutativity, perverse subadditivity, delta^2, monotonicity,
/// representative independence of the squares, the Goresky-Pardon bound and
/// its factorization through doubled perversity, Cartan, and the small Adem
/// instances. Deterministic for a fixed seed.
std::vector<PropertyReport> verify_suite(Engine& eng, const VerifyOptions& opt);

std::string format_report(const std::vector<PropertyReport>& reports);
bool all_pass(const std::vector<PropertyReport>& reports);

/// Default perversity sample for a formal dimension: all vectors with
/// entries in {-1,0,1,2} up to n = 2, a reduced set above.
std::vector<Perversity> default_perversities(int n);

} // namespace icsq
