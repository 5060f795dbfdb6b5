// basis.hpp -- occupation-number bases and ladder operators for bosons and
// fermions.
//
// Fermion sign convention: creating in orbital r picks up the phase
// (-1)^(sum of occupations in orbitals s > r).  This is the string over the
// HIGHER orbitals; interop with codes using the s < r string flips signs.

#pragma once

#include "qmkit/core/types.hpp"

#include <map>
#include <vector>

namespace qmkit::fock {

enum class Statistics { Boson, Fermion };

struct FockBasis {
    int orbitals = 1;
    Statistics statistics = Statistics::Boson;
    int total_n = -1;   // >= 0: fixed-N bosonic sector
    int cap = 1;        // per-orbital cap when total_n < 0 (1 for fermions)
    std::vector<std::vector<int>> states;  // lexicographic, orbital 1 fastest
    std::map<std::vector<int>, int> index;

    int dim() const { return static_cast<int>(states.size()); }

    // bosons with a fixed total particle number
    static FockBasis boson_sector(int orbitals, int total_n);
    // bosons with a per-orbital occupation cap
    static FockBasis boson_capped(int orbitals, int cap);
    static FockBasis fermion(int orbitals);
};

struct LadderPair {
    ComplexMatrix annihilate;
    ComplexMatrix create;
};

// Matrix pair (a_r, a_r^dagger) on the basis.  Bosonic fixed-N sectors do
// not close under a single ladder operator; use boson_capped there.
LadderPair ladder(const FockBasis& basis, int orbital);

// apply a_r^dagger a_s to a basis state; returns the target index (or -1 if
// annihilated) and the amplitude including all statistics factors
struct HopResult {
    int target;
    double amplitude;
};
HopResult apply_hop(const FockBasis& basis, int create_orbital, int annihilate_orbital,
                    int state_index);

}  // namespace qmkit::fock
