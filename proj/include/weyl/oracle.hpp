#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weyl/correspondence.hpp"
#include "weyl/rng.hpp"
#include "weyl/subspace.hpp"
#include "weyl/weyl_op.hpp"

namespace weyl {

struct CaseReport {
    std::string description;
    bool pass = false;
    std::string counterexample;  // replayable inputs, present on failure
};

/// Direct-loop membership check over multiplier times the bound used by
/// the fast criterion; the reference the fast path is validated against.
bool oracle_in_DRV(const WeylOp& d, const Subspace& V, int multiplier);

/// Exhibits a codimension-one subspace with empty conductor at every
/// tested degree: the kernel of p -> sum_j j! coeff_j(p). Documents why
/// the representation requires a nonzero ideal inside.
CaseReport oracle_zero_conductor_demo(int degree_cap = 12);

const std::vector<std::string>& suite_names();

/// Deterministic randomized suite; identical (name, seed, caps, cases)
/// reproduce identical reports. cases = 0 selects the suite default.
/// Failing reports carry a greedily shrunk counterexample.
std::vector<CaseReport> run_suite(const std::string& name, std::uint64_t seed, const Caps& caps,
                                  int cases = 0);

}  // namespace weyl
