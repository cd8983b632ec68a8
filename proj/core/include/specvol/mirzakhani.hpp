#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "specvol/graded.hpp"
#include "specvol/polynomial.hpp"

namespace specvol {

/// beta_0, beta_1, ... extended on demand.
class BetaSequence {
public:
    using Generator = std::function<std::vector<GradedCoefficient>(int count)>;

    BetaSequence(std::string id, GeneratorFamily family, Generator generate);

    const std::string& id() const { return id_; }
    GeneratorFamily family() const { return family_; }
    GradedCoefficient operator[](int n) const;

private:
    std::string id_;
    GeneratorFamily family_;
    Generator generate_;
    mutable std::mutex mutex_;
    mutable std::vector<GradedCoefficient> values_;
};

/// Coefficient of z^(2n) in exp(sum_m zeta_q(2m) (4 z^2)^m / m).
GradedCoefficient beta_q(int n);
/// (2^(2i+1) - 4) zeta(2i).
GradedCoefficient beta_classical(int i);

std::shared_ptr<const BetaSequence> q_beta_sequence();
std::shared_ptr<const BetaSequence> classical_beta_sequence();

class MirzakhaniEngine {
public:
    /// V_{1,1} = L^2/48 + v11.
    MirzakhaniEngine(std::shared_ptr<const BetaSequence> beta, GradedCoefficient v11);

    static MirzakhaniEngine q_deformed();
    static MirzakhaniEngine classical();

    /// Symmetric polynomial in L_1..L_n; memoized.
    BoundaryPolynomial volume(int g, int n);

private:
    BoundaryPolynomial compute(int g, int n);

    std::shared_ptr<const BetaSequence> beta_;
    GradedCoefficient v11_;
    std::mutex mutex_;
    std::map<std::pair<int, int>, BoundaryPolynomial> memo_;
};

/// The line-1/2 transform written through F_{2k+1}: used to cross-check the
/// beta form. Returns the L^(2m) coefficients of
/// (2a+1)!(2b+1)!/(2a+2b+3)! F_{2a+2b+3}(L).
std::vector<GradedCoefficient> classical_f_transform(int a, int b);
/// Same transform in beta form: (2a+1)!(2b+1)! sum_m beta_{a+b+2-m} L^(2m)/(2m)!.
std::vector<GradedCoefficient> beta_transform(const BetaSequence& beta, int a, int b);

/// s_1..s_max_m from -log sum_k (2k+1)!! y_k lambda^k.
std::vector<GradedCoefficient> s_coefficients(int max_m);

struct LimitCheck {
    GradedCoefficient stored;     // V_g(q) as a ZetaQ expression
    GradedCoefficient limit;      // its classical image
    GradedCoefficient expected;   // Vol^WP(M_g)
};

/// g in {2, 3}.
LimitCheck vg_limit_check(int g);

}  // namespace specvol
