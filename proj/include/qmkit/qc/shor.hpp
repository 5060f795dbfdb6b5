// shor.hpp -- controlled modular multiplication, order finding on the
// simulator, Euclid's algorithm, the RSA round trip, and the factoring
// pipeline.
//
// Register layout used by the order finder: qubits [0, n_c) hold the
// control value x (LSB first), qubits [n_c, n_c + n_y) hold the work value
// y.  Work states y >= N are fixed points of every multiplication stage so
// each stage stays a permutation of the full space.

#pragma once

#include "qmkit/qc/register.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace qmkit::qc {

struct NotCoprimeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ExtractionFailedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RetriesExhaustedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoInverseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

int64_t euclid_gcd(int64_t a, int64_t b);
int64_t mod_pow(int64_t base, int64_t exponent, int64_t modulus);

// multiplicative order of m mod n by direct iteration (classical oracle)
int64_t multiplicative_order(int64_t m, int64_t n);

// apply the n_c staged controlled multiplications y -> m^x y mod n to a
// register laid out as described above
void controlled_modmul(QubitRegister& reg, int n_c, int n_y, int64_t m, int64_t n);

// the same operation as a pure index permutation (for exhaustive checks)
int64_t controlled_modmul_index(int64_t index, int n_c, int n_y, int64_t m, int64_t n);

struct PeriodFindResult {
    int64_t period = 0;
    std::vector<int64_t> sampled_k;  // transcript of measured x values
    int attempts = 0;
};

// reset -> Hadamard -> staged modular multiplication -> QFT -> sample;
// the period is extracted from k/2^{n_c} by continued-fraction convergents
// with denominator < n and validated by m^r = 1 (mod n)
PeriodFindResult period_find(int64_t n, int64_t m, int n_c, std::mt19937_64& rng,
                             int max_attempts = 32);

// exact measurement distribution over k for deterministic runs
std::vector<double> period_find_distribution(int64_t n, int64_t m, int n_c);

struct ShorTranscript {
    int64_t n = 0;
    struct Attempt {
        int64_t m;
        bool lucky_gcd;
        int64_t period;                  // 0 if not reached
        std::vector<int64_t> sampled_k;
        int64_t q;                       // m^(r/2) mod n, 0 if not reached
        std::string outcome;
    };
    std::vector<Attempt> attempts;
    int64_t factor_p = 0;
    int64_t factor_q = 0;
};

// classical screening (composite, odd, not a prime power) plus the quantum
// order-finding loop; n_c defaults to 2 ceil(log2 N) + 1
ShorTranscript shor_factor(int64_t n, std::mt19937_64& rng, int n_c = 0,
                           int max_retries = 32);

struct RsaRoundTrip {
    int64_t n;
    int64_t b;          // private exponent
    int64_t encrypted;  // B = A^a mod N
    int64_t recovered;  // B^b mod N
};

RsaRoundTrip rsa_roundtrip(int64_t p, int64_t q, int64_t a, int64_t message);

}  // namespace qmkit::qc
