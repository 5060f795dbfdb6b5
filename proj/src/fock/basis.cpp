#include "qmkit/fock/basis.hpp"

#include <cmath>
#include <functional>

namespace qmkit::fock {

namespace {

void enumerate_sector(int orbitals, int total, std::vector<int>& current,
                      std::vector<std::vector<int>>& out) {
    // orbital 1 runs fastest: recurse from the last orbital down
    const int filled = static_cast<int>(current.size());
    if (filled == orbitals - 1) {
        current.push_back(total);
        out.push_back(current);
        current.pop_back();
        return;
    }
    // remaining orbitals take what is left; enumerate count in the slowest
    // remaining orbital last
    for (int n = 0; n <= total; ++n) {
        current.push_back(n);
        enumerate_sector(orbitals, total - n, current, out);
        current.pop_back();
    }
}

}  // namespace

FockBasis FockBasis::boson_sector(int orbitals, int total_n) {
    if (orbitals < 1 || total_n < 0)
        throw std::invalid_argument("FockBasis: bad sector parameters");
    FockBasis b;
    b.orbitals = orbitals;
    b.statistics = Statistics::Boson;
    b.total_n = total_n;
    b.cap = total_n;
    // generate with orbital 1 varying fastest: iterate occupations of the
    // higher orbitals in outer loops
    std::vector<std::vector<int>> raw;
    std::vector<int> current;
    enumerate_sector(orbitals, total_n, current, raw);
    // enumerate_sector builds tuples with orbital 1 first but slowest; sort
    // into the documented lexicographic order (orbital 1 fastest)
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b_) {
        for (int k = static_cast<int>(a.size()) - 1; k >= 0; --k)
            if (a[k] != b_[k]) return a[k] < b_[k];
        return false;
    });
    b.states = std::move(raw);
    for (int i = 0; i < b.dim(); ++i) b.index[b.states[i]] = i;
    return b;
}

FockBasis FockBasis::boson_capped(int orbitals, int cap) {
    if (orbitals < 1 || cap < 0)
        throw std::invalid_argument("FockBasis: bad cap parameters");
    FockBasis b;
    b.orbitals = orbitals;
    b.statistics = Statistics::Boson;
    b.total_n = -1;
    b.cap = cap;
    const long dim = static_cast<long>(std::pow(cap + 1.0, orbitals) + 0.5);
    std::vector<int> state(orbitals, 0);
    for (long i = 0; i < dim; ++i) {
        b.states.push_back(state);
        // increment with orbital 1 (index 0) fastest
        for (int r = 0; r < orbitals; ++r) {
            if (++state[r] <= cap) break;
            state[r] = 0;
        }
    }
    for (int i = 0; i < b.dim(); ++i) b.index[b.states[i]] = i;
    return b;
}

FockBasis FockBasis::fermion(int orbitals) {
    FockBasis b = boson_capped(orbitals, 1);
    b.statistics = Statistics::Fermion;
    return b;
}

namespace {

// fermionic string over orbitals strictly above r
double fermion_sign(const std::vector<int>& occ, int r) {
    int count = 0;
    for (int s = r + 1; s < static_cast<int>(occ.size()); ++s) count += occ[s];
    return (count % 2 == 0) ? 1.0 : -1.0;
}

}  // namespace

LadderPair ladder(const FockBasis& basis, int orbital) {
    if (orbital < 0 || orbital >= basis.orbitals)
        throw std::invalid_argument("ladder: orbital out of range");
    if (basis.total_n >= 0)
        throw std::invalid_argument(
            "ladder: fixed-N sectors do not close under a single ladder operator");
    const int d = basis.dim();
    LadderPair out;
    out.annihilate = ComplexMatrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        const auto& occ = basis.states[i];
        const int n = occ[orbital];
        if (n == 0) continue;
        std::vector<int> lowered = occ;
        lowered[orbital] = n - 1;
        const int j = basis.index.at(lowered);
        double amp = std::sqrt(static_cast<double>(n));
        if (basis.statistics == Statistics::Fermion) amp *= fermion_sign(occ, orbital);
        out.annihilate(j, i) = amp;
    }
    out.create = out.annihilate.adjoint();
    return out;
}

HopResult apply_hop(const FockBasis& basis, int create_orbital, int annihilate_orbital,
                    int state_index) {
    const auto& occ = basis.states[state_index];
    const int n_s = occ[annihilate_orbital];
    if (n_s == 0) return {-1, 0.0};
    std::vector<int> work = occ;
    double amp = std::sqrt(static_cast<double>(n_s));
    if (basis.statistics == Statistics::Fermion)
        amp *= fermion_sign(work, annihilate_orbital);
    work[annihilate_orbital] = n_s - 1;

    const int n_r = work[create_orbital];
    if (basis.statistics == Statistics::Fermion && n_r == 1) return {-1, 0.0};
    if (basis.total_n < 0 && n_r + 1 > basis.cap) return {-1, 0.0};
    amp *= std::sqrt(n_r + 1.0);
    if (basis.statistics == Statistics::Fermion) amp *= fermion_sign(work, create_orbital);
    work[create_orbital] = n_r + 1;

    const auto it = basis.index.find(work);
    if (it == basis.index.end()) return {-1, 0.0};
    return {it->second, amp};
}

}  // namespace qmkit::fock
