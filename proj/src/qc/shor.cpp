#include "qmkit/qc/shor.hpp"

#include <algorithm>
#include <cmath>

namespace qmkit::qc {

int64_t euclid_gcd(int64_t a, int64_t b) {
    if (a < 0 || b < 0) throw std::invalid_argument("euclid_gcd: arguments must be >= 0");
    if (a == 0 && b == 0) throw std::invalid_argument("euclid_gcd: gcd(0, 0) undefined");
    while (b != 0) {
        const int64_t r = a % b;
        a = b;
        b = r;
    }
    return a;
}

int64_t mod_pow(int64_t base, int64_t exponent, int64_t modulus) {
    int64_t result = 1 % modulus;
    int64_t b = base % modulus;
    while (exponent > 0) {
        if (exponent & 1) result = (result * b) % modulus;
        b = (b * b) % modulus;
        exponent >>= 1;
    }
    return result;
}

int64_t multiplicative_order(int64_t m, int64_t n) {
    if (euclid_gcd(m % n, n) != 1)
        throw NotCoprimeError("multiplicative_order: arguments share a factor");
    int64_t value = m % n;
    int64_t r = 1;
    while (value != 1) {
        value = (value * m) % n;
        ++r;
    }
    return r;
}

namespace {

// permutation y -> (m_s y) mod n on [0, n), identity above
void stage_multiply(ComplexVector& amplitudes, int n_c, int n_y, int stage, int64_t m_s,
                    int64_t n) {
    const int64_t dim_x = int64_t(1) << n_c;
    const int64_t dim_y = int64_t(1) << n_y;
    const int64_t control = int64_t(1) << stage;
    ComplexVector scratch(dim_y);
    for (int64_t x = 0; x < dim_x; ++x) {
        if (!(x & control)) continue;
        const int64_t offset = x;  // x lives in the low bits
        scratch.setZero();
        for (int64_t y = 0; y < dim_y; ++y) {
            const int64_t target = (y < n) ? (m_s * y) % n : y;
            scratch(target) += amplitudes(offset + (y << n_c));
        }
        for (int64_t y = 0; y < dim_y; ++y) amplitudes(offset + (y << n_c)) = scratch(y);
    }
}

}  // namespace

void controlled_modmul(QubitRegister& reg, int n_c, int n_y, int64_t m, int64_t n) {
    if (reg.qubits != n_c + n_y)
        throw std::invalid_argument("controlled_modmul: register layout mismatch");
    if (euclid_gcd(m % n, n) != 1)
        throw NotCoprimeError("controlled_modmul: base not coprime to the modulus");
    if ((int64_t(1) << n_y) < n)
        throw std::invalid_argument("controlled_modmul: work register too narrow");
    int64_t m_s = m % n;
    for (int s = 0; s < n_c; ++s) {
        stage_multiply(reg.amplitudes, n_c, n_y, s, m_s, n);
        m_s = (m_s * m_s) % n;
    }
}

int64_t controlled_modmul_index(int64_t index, int n_c, int n_y, int64_t m, int64_t n) {
    const int64_t dim_x = int64_t(1) << n_c;
    const int64_t x = index & (dim_x - 1);
    const int64_t y = index >> n_c;
    if (y >= (int64_t(1) << n_y))
        throw std::invalid_argument("controlled_modmul_index: index out of range");
    if (y >= n) return index;  // fixed point
    const int64_t fy = (mod_pow(m, x, n) * y) % n;
    return x + (fy << n_c);
}

namespace {

// continued-fraction convergents of k / 2^{n_c}; candidate denominators < n
std::vector<int64_t> convergent_denominators(int64_t k, int64_t capacity, int64_t n) {
    std::vector<int64_t> out;
    int64_t num = k, den = capacity;
    int64_t q_prev = 1, q_curr = 0;
    while (den != 0) {
        const int64_t a = num / den;
        const int64_t q_next = a * q_curr + q_prev;
        if (q_next >= n) break;
        if (q_next > 0) out.push_back(q_next);
        q_prev = q_curr;
        q_curr = q_next;
        const int64_t r = num % den;
        num = den;
        den = r;
    }
    return out;
}

std::vector<double> measurement_distribution(int64_t n, int64_t m, int n_c, int n_y) {
    QubitRegister reg(n_c + n_y);
    reg.set_basis_state(int64_t(1) << n_c);  // x = 0, y = 1
    hadamard_all(reg, 0, n_c);
    controlled_modmul(reg, n_c, n_y, m, n);
    qft(reg, 0, n_c);

    const int64_t dim_x = int64_t(1) << n_c;
    std::vector<double> probs(dim_x, 0.0);
    for (int64_t i = 0; i < reg.dim(); ++i)
        probs[i & (dim_x - 1)] += std::norm(reg.amplitudes(i));
    return probs;
}

int work_width(int64_t n) {
    int n_y = 1;
    while ((int64_t(1) << n_y) < n) ++n_y;
    return n_y;
}

}  // namespace

std::vector<double> period_find_distribution(int64_t n, int64_t m, int n_c) {
    return measurement_distribution(n, m, n_c, work_width(n));
}

PeriodFindResult period_find(int64_t n, int64_t m, int n_c, std::mt19937_64& rng,
                             int max_attempts) {
    if (euclid_gcd(m % n, n) != 1)
        throw NotCoprimeError("period_find: base not coprime to the modulus");
    const int n_y = work_width(n);
    const auto probs = measurement_distribution(n, m, n_c, n_y);
    const int64_t capacity = int64_t(1) << n_c;

    std::discrete_distribution<int64_t> sampler(probs.begin(), probs.end());
    PeriodFindResult result;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        ++result.attempts;
        const int64_t k = sampler(rng);
        result.sampled_k.push_back(k);
        for (int64_t candidate : convergent_denominators(k, capacity, n)) {
            if (mod_pow(m, candidate, n) == 1) {
                result.period = candidate;
                return result;
            }
        }
    }
    throw ExtractionFailedError("period_find: no convergent yielded a valid period");
}

ShorTranscript shor_factor(int64_t n, std::mt19937_64& rng, int n_c, int max_retries) {
    ShorTranscript transcript;
    transcript.n = n;
    if (n < 4) throw std::invalid_argument("shor_factor: N must be composite");
    if (n % 2 == 0) throw std::invalid_argument("shor_factor: N must be odd");

    // prime-power and primality screening
    for (int64_t root = 2; root * root <= n; ++root) {
        int64_t power = root;
        while (power <= n / root) {
            power *= root;
            if (power == n)
                throw std::invalid_argument(
                    "shor_factor: N is a prime power, factored classically");
        }
    }
    bool prime = n > 1;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) prime = false;
    if (prime) throw std::invalid_argument("shor_factor: N is prime");

    if (n_c <= 0) {
        const int bits = work_width(n);
        n_c = 2 * bits + 1;
    }

    std::uniform_int_distribution<int64_t> pick(2, n - 2);
    for (int retry = 0; retry < max_retries; ++retry) {
        ShorTranscript::Attempt attempt{};
        attempt.m = pick(rng);
        const int64_t shared = euclid_gcd(attempt.m, n);
        if (shared != 1) {
            attempt.lucky_gcd = true;
            attempt.outcome = "lucky gcd";
            transcript.attempts.push_back(attempt);
            transcript.factor_p = shared;
            transcript.factor_q = n / shared;
            return transcript;
        }

        PeriodFindResult found;
        try {
            found = period_find(n, attempt.m, n_c, rng);
        } catch (const ExtractionFailedError&) {
            attempt.outcome = "period extraction failed";
            transcript.attempts.push_back(attempt);
            continue;
        }
        attempt.period = found.period;
        attempt.sampled_k = found.sampled_k;

        if (found.period % 2 != 0) {
            attempt.outcome = "odd period";
            transcript.attempts.push_back(attempt);
            continue;
        }
        const int64_t q = mod_pow(attempt.m, found.period / 2, n);
        attempt.q = q;
        if (q == 1 || q == n - 1) {
            attempt.outcome = "trivial square root";
            transcript.attempts.push_back(attempt);
            continue;
        }
        const int64_t p = euclid_gcd(q - 1, n);
        const int64_t p2 = euclid_gcd(q + 1, n);
        const int64_t factor = (p > 1 && p < n) ? p : p2;
        attempt.outcome = "factored";
        transcript.attempts.push_back(attempt);
        transcript.factor_p = factor;
        transcript.factor_q = n / factor;
        return transcript;
    }
    throw RetriesExhaustedError("shor_factor: retry budget exhausted");
}

RsaRoundTrip rsa_roundtrip(int64_t p, int64_t q, int64_t a, int64_t message) {
    const int64_t n = p * q;
    const int64_t totient = (p - 1) * (q - 1);
    if (message < 0 || message >= n)
        throw std::invalid_argument("rsa_roundtrip: message out of range");

    // extended Euclid for the modular inverse of a
    int64_t old_r = a % totient, r = totient;
    int64_t old_s = 1, s = 0;
    while (r != 0) {
        const int64_t quotient = old_r / r;
        int64_t tmp = old_r - quotient * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quotient * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw NoInverseError("rsa_roundtrip: exponent not invertible");
    const int64_t b = ((old_s % totient) + totient) % totient;

    RsaRoundTrip out;
    out.n = n;
    out.b = b;
    out.encrypted = mod_pow(message, a, n);
    out.recovered = mod_pow(out.encrypted, b, n);
    return out;
}

}  // namespace qmkit::qc
