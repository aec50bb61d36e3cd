#include "psv/sieve_operator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "psv/farey.hpp"

namespace psv::sieve {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr std::int64_t kIterationCap = 100000;

double kahan_sum(const std::vector<double>& terms) {
    double total = 0, comp = 0;
    for (double v : terms) {
        double y = v - comp;
        double t = total + y;
        comp = (t - total) - y;
        total = t;
    }
    return total;
}

}  // namespace

ToeplitzGram build_gram(std::int64_t Q, int k, int N, int jobs) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    const farey::FareySet set = farey::gen_farey_set(Q, k);
    std::vector<double> angles;
    angles.reserve(set.size());
    for (const auto& pf : set.elems) angles.push_back(pf.value().to_double());

    ToeplitzGram gram;
    gram.Q = Q;
    gram.k = k;
    gram.N = N;
    gram.set_size = set.size();
    gram.first_row.assign(std::size_t(N), 0.0);
    std::vector<double> sin_residue(std::size_t(N), 0.0);

    auto fill = [&](int d_lo, int d_hi) {
        std::vector<double> cos_terms(set.size()), sin_terms(set.size());
        for (int d = d_lo; d < d_hi; ++d) {
            for (std::size_t i = 0; i < angles.size(); ++i) {
                double theta = kTwoPi * d * angles[i];
                cos_terms[i] = std::cos(theta);
                sin_terms[i] = std::sin(theta);
            }
            gram.first_row[std::size_t(d)] = kahan_sum(cos_terms);
            sin_residue[std::size_t(d)] = std::abs(kahan_sum(sin_terms));
        }
    };

    const int workers = std::max(1, std::min(jobs, N));
    if (workers == 1) {
        fill(0, N);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(fill, w * N / workers, (w + 1) * N / workers);
        for (auto& t : pool) t.join();
    }
    gram.first_row[0] = double(set.size());  // each cosine is exactly 1 at d = 0
    gram.imag_residue = *std::max_element(sin_residue.begin(), sin_residue.end());
    return gram;
}

void toeplitz_matvec(std::span<const double> first_row, std::span<const double> x,
                     std::span<double> y) {
    const std::size_t n = x.size();
    for (std::size_t m = 0; m < n; ++m) {
        double acc = 0;
        for (std::size_t j = 0; j < n; ++j)
            acc += first_row[m > j ? m - j : j - m] * x[j];
        y[m] = acc;
    }
}

SieveEstimate delta_exact(std::int64_t Q, int k, int N, double tol) {
    if (tol <= 0) throw std::invalid_argument("tol must be positive");
    const ToeplitzGram gram = build_gram(Q, k, N);

    SieveEstimate est;
    est.Q = Q;
    est.k = k;
    est.N = N;

    // Deterministic start: all ones plus an index-linear perturbation.
    std::vector<double> v((std::size_t)N), w((std::size_t)N);
    for (int i = 0; i < N; ++i) v[std::size_t(i)] = 1.0 + 0.5 * double(i + 1) / N;
    auto normalize = [](std::vector<double>& u) {
        double norm = 0;
        for (double c : u) norm += c * c;
        norm = std::sqrt(norm);
        for (double& c : u) c /= norm;
        return norm;
    };
    normalize(v);

    double lambda = 0, residual = 0;
    std::int64_t iter = 0;
    for (; iter < kIterationCap; ++iter) {
        toeplitz_matvec(gram.first_row, v, w);
        lambda = 0;
        for (int i = 0; i < N; ++i) lambda += v[std::size_t(i)] * w[std::size_t(i)];
        residual = 0;
        for (int i = 0; i < N; ++i) {
            double r = w[std::size_t(i)] - lambda * v[std::size_t(i)];
            residual += r * r;
        }
        residual = std::sqrt(residual);
        if (residual <= tol * std::max(std::abs(lambda), 1.0)) {
            ++iter;
            break;
        }
        v = w;
        normalize(v);
    }
    est.lambda_max = lambda;
    est.residual = residual;
    est.iterations = iter;
    est.converged = residual <= tol * std::max(std::abs(lambda), 1.0);

    est.witness_spike = double(gram.set_size);
    {
        const farey::FareySet set = farey::gen_farey_set(Q, k);
        double alpha0 = set.elems.front().value().to_double();
        std::vector<std::complex<double>> z((std::size_t)N);
        for (int n = 1; n <= N; ++n)
            z[std::size_t(n - 1)] = std::polar(1.0, -kTwoPi * n * alpha0);
        est.witness_phase = sieve_ratio(z, Q, k);
    }
    est.upper_trivial_1 = double(ipow_checked(Q, 2 * k)) + N - 1;
    double u2 = 0;
    for (std::int64_t q = 1; q <= Q; ++q) u2 += double(ipow_checked(q, k)) + N - 1;
    est.upper_trivial_2 = u2;
    return est;
}

double sieve_ratio(std::span<const std::complex<double>> z, std::int64_t Q, int k,
                   std::int64_t M) {
    double norm = 0;
    for (const auto& c : z) norm += std::norm(c);
    if (norm == 0) throw std::invalid_argument("z must not be identically zero");
    const farey::FareySet set = farey::gen_farey_set(Q, k);
    std::vector<double> terms;
    terms.reserve(set.size());
    for (const auto& pf : set.elems) {
        double alpha = pf.value().to_double();
        std::complex<double> acc(0, 0);
        for (std::size_t i = 0; i < z.size(); ++i) {
            double n = double(M + 1 + std::int64_t(i));
            acc += z[i] * std::polar(1.0, kTwoPi * n * alpha);
        }
        terms.push_back(std::norm(acc));
    }
    return kahan_sum(terms) / norm;
}

SandwichReport bound_sandwich_check(std::int64_t Q, int k, int N, double tol) {
    SandwichReport report;
    report.estimate = delta_exact(Q, k, N, std::min(tol, 1e-9));
    report.lower = std::max(double(report.estimate.witness_spike), double(N));
    report.upper = std::min(report.estimate.upper_trivial_1, report.estimate.upper_trivial_2);
    const double lam = report.estimate.lambda_max;
    report.pass = report.lower <= lam * (1 + tol) && lam <= report.upper * (1 + tol);
    return report;
}

}  // namespace psv::sieve
