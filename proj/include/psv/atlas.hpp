#pragma once

#include <functional>
#include <string>
#include <vector>

#include "psv/rational.hpp"

namespace psv::atlas {

/// Named bounds on Delta_k(Q, N), each as the exponent g(lambda) of Q in the
/// convention N = Q^lambda, Q^epsilon factors ignored.
enum class BoundId {
    Trivial1,      // Q^{2k} + N
    Trivial2,      // Q (Q^k + N)
    Zhao,          // Q^{k+1} + N Q^{1-kappa} + N^{1-kappa} Q^{1+k kappa}
    BaierZhao,     // Q^{k+1} + N + N^{1/2} Q^k
    Halupczok,     // Q^{k+1} + min of two branches
    Munsch,        // N^{1-1/(k(k+1))} Q^{1+1/(k+1)}
    BMS,           // N Q^{1/2} + N^{3/4} Q^{k/2+1/4+1/(2 sqrt k)}   (k >= 5)
    BZCubic,       // Q^4 + N^{9/10} Q^{6/5} + N Q^{6/7}             (k = 3)
    BZSquaresMin,  // Q^3 + N + min(N Q^{1/2}, N^{1/2} Q^2)          (k = 2)
    BZSquaresSum,  // Q^3 + N + N Q^{1/2} + N^{1/2} Q^2              (k = 2)
    Thm1i,         // N^{1/2} Q^k
    Thm1ii,        // N^{3/4} Q^{k/2+1/4+1/(2 sqrt k)}               (k >= 3)
    Corollary,     // N^{1-2/(k(k+1))} Q^{1+2/(k+1)}
};

std::string bound_name(BoundId id);
BoundId bound_from_name(const std::string& name);
bool applicable(BoundId id, int k);
bool has_epsilon(BoundId id);

/// Exponent of Q in the named bound at N = Q^lambda; requires k < lambda < 2k
/// and applicability at k. Throws std::domain_error otherwise.
double exponent_of(BoundId id, int k, double lambda);

/// Exponent of the t-parameterized bound N^{1-2/(t(t+1))} Q^{1+(4k-2t)/(t(t+1))};
/// both algebraic forms are evaluated and must agree.
double f_kt(int k, int t, double lambda);

/// Exponent of the conditional bound N^{1-1/s} Q^{1+k/s}.
double conditional_exponent(int s, int k, double lambda);

/// Two equivalent forms of f_{k,t}, in exact rational arithmetic:
/// lambda (1 - 2/(t(t+1))) + 1 + (4k - 2t)/(t(t+1))  and
/// lambda + 1 + 2(2k - lambda)/(t(t+1)) - 2/(t+1).
Rational f_kt_form1(int k, int t, const Rational& lambda);
Rational f_kt_form2(int k, int t, const Rational& lambda);

/// argmin over t of f_kt: min{ceil(2(2k - lambda)), k}, cross-checked against
/// exhaustive minimization.
int optimal_t(int k, double lambda);

/// The set of previously published bounds contested at this k.
std::vector<BoundId> field_for(int k);

struct Challenger {
    std::string name;
    std::function<double(double)> exponent;  // lambda -> exponent
};

Challenger challenger_bound(BoundId id, int k);
Challenger challenger_thm2(int k, int t);
Challenger challenger_thm2_whole(int k);  // min over t <= k

struct AtlasRow {
    double lambda = 0;
    BoundId winner{};
    double winner_exponent = 0;
    double challenger_exponent = 0;
    bool challenger_beats = false;
    bool near_tie = false;  // |field min - challenger| <= 1e-9, flagged not decided
};

struct AtlasReport {
    int k = 0;
    std::string challenger;
    std::vector<AtlasRow> rows;
    // Maximal open intervals inside (k, 2k) where the challenger is strictly
    // below every field bound; endpoints from bisection on the piecewise
    // linear exponents, not grid resolution.
    std::vector<std::pair<double, double>> beat_intervals;
    double beat_fraction = 0;  // total beat measure / k
};

AtlasReport dominance_scan(int k, double grid_lo, double grid_hi, double grid_step,
                           const Challenger& challenger,
                           const std::vector<BoundId>& field);

/// Convenience: scan the whole nontrivial range with the default field.
AtlasReport dominance_scan(int k, const Challenger& challenger, double grid_step = 0.001);

/// Crossover of two exponent curves inside (lo, hi): the point where
/// f - g changes sign, found by bisection. Throws if no sign change.
double crossover(const std::function<double(double)>& f,
                 const std::function<double(double)>& g, double lo, double hi);

struct ClaimResult {
    std::string name;
    bool pass = false;
    double computed = 0;
    double expected = 0;
    std::string detail;
};

/// Every published comparison claim applicable at this k, evaluated by
/// exponent arithmetic.
std::vector<ClaimResult> claims_check(int k);

/// Piecewise definition of lambda_1, the reach of the f_{k,t} family.
double lambda1_formula(int k);

}  // namespace psv::atlas
