#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace psv::sieve {

/// Symmetric Toeplitz quadratic-form matrix of the sieve, stored by first row:
/// H[d] = sum over alpha in S_k(Q) of cos(2 pi d alpha).
struct ToeplitzGram {
    std::int64_t Q = 1;
    int k = 1;
    int N = 1;
    std::vector<double> first_row;
    double imag_residue = 0;  // max |sum of sin terms| over d; should be ~0
    std::size_t set_size = 0; // |S_k(Q)|
};

ToeplitzGram build_gram(std::int64_t Q, int k, int N, int jobs = 1);

struct SieveEstimate {
    std::int64_t Q = 1;
    int k = 1;
    int N = 1;
    double lambda_max = 0;   // = Delta_k(Q, N): top eigenvalue of the Gram matrix
    double residual = 0;     // ||Hv - lambda v|| / ||v||
    std::int64_t iterations = 0;
    bool converged = true;
    double witness_spike = 0;   // ratio for z = (1, 0, ..., 0): equals |S_k(Q)|
    double witness_phase = 0;   // ratio for z_n = e(-n alpha0): at least N
    double upper_trivial_1 = 0; // Q^{2k} + N - 1
    double upper_trivial_2 = 0; // sum_{q<=Q} (q^k + N - 1)
};

/// The exact sieve constant as the largest eigenvalue of the Gram matrix,
/// by power iteration with a deterministic start vector.
///
/// The quadratic form sum_{alpha in S} |sum z_n e(n alpha)|^2 equals
/// z* H z with H[m][n] = H[|m - n|] (entries depend only on m - n, so the
/// window start M drops out), and the infimum of admissible constants is the
/// supremum of the Rayleigh quotient, i.e. the operator norm of H.
SieveEstimate delta_exact(std::int64_t Q, int k, int N, double tol = 1e-6);

/// Rayleigh quotient of one concrete sequence:
/// (sum_{alpha in S_k(Q)} |sum_n z_n e(n alpha)|^2) / sum |z_n|^2,
/// with n running over M+1 .. M+N.
double sieve_ratio(std::span<const std::complex<double>> z, std::int64_t Q, int k,
                   std::int64_t M = 0);

struct SandwichReport {
    SieveEstimate estimate;
    double lower = 0;   // max(|S_k(Q)|, N)
    double upper = 0;   // min(Q^{2k} + N - 1, sum_{q<=Q}(q^k + N - 1))
    bool pass = false;
};

/// Checks lower <= lambda_max <= upper within relative tolerance tol.
SandwichReport bound_sandwich_check(std::int64_t Q, int k, int N, double tol = 1e-6);

/// y = H x for the Toeplitz matrix described by first_row.
void toeplitz_matvec(std::span<const double> first_row, std::span<const double> x,
                     std::span<double> y);

}  // namespace psv::sieve
