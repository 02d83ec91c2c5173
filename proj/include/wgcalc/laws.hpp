#pragma once

#include "wgcalc/category.hpp"
#include "wgcalc/rational.hpp"

#include <string>
#include <vector>

namespace wgc {

enum class LawFamily {
    gaussian,
    poisson,
    semicircular,
    circular,
    free_poisson,
    compound_poisson,
    symmetrized_rayleigh,
};

struct LawDescriptor {
    LawFamily family = LawFamily::gaussian;
    Rational mean = 0;
    Rational variance = 0; // also the covariance kappa_2(c, c*) of a circular element
    Rational lambda = 0;
    std::vector<Rational> jump_moments; // compound Poisson: moments m_1, m_2, ... of the jump

    static LawDescriptor gaussian(Rational mean, Rational variance);
    static LawDescriptor poisson(Rational lambda);
    static LawDescriptor semicircular(Rational mean, Rational variance);
    static LawDescriptor circular(Rational covariance, Rational mean = 0);
    static LawDescriptor free_poisson(Rational lambda);
    static LawDescriptor compound_poisson(Rational lambda, std::vector<Rational> jump_moments);
    static LawDescriptor symmetrized_rayleigh(Rational variance);

    std::string name() const;
    bool is_free() const;
};

/// kappa_1..kappa_{r_max} (classical for gaussian/poisson/compound, free otherwise).
/// For circular elements entry 2 is kappa_2(c, c*); kappa_2(c, c) vanishes.
std::vector<Rational> law_cumulants(const LawDescriptor& law, int r_max);

/// m_1..m_{r_max}; the only way symmetrized Rayleigh laws are described.
std::vector<Rational> law_moments(const LawDescriptor& law, int r_max);

/// Limit law of Tr(u^k) for O, B (gaussian), O+, B+ (semicircular for k <= 2, circular
/// beyond), S and H (compound Poisson with r_max jump moments). Other kinds throw
/// unsupported-category.
LawDescriptor trace_law(const Category& cat, int k, int r_max = 4);

struct DecompositionReport {
    int checks = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// Cumulants of u_k assembled from the cycle-variable decompositions (independent
/// Poisson for S and H, free Poisson / semicircular / circular for S+ and H+), compared
/// with closed_form_cumulant for every joint spec of order <= 3 and k <= k_max.
DecompositionReport cycle_decomposition_check(Kind group, int k_max);

} // namespace wgc
