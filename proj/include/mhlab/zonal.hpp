#pragma once

#include <map>
#include <vector>

#include "mhlab/mpoly.hpp"
#include "mhlab/partitions.hpp"

namespace mhlab {

// Eigenvalue data of a zonal polynomial: rho = sum_i lambda_i (lambda_i - i),
// alpha = rho + |lambda| * (m - 1).
struct ZonalEigen {
    long rho = 0;
    long alpha = 0;
};

// Symmetric polynomial in the monomial symmetric basis: sum c_mu M_mu, all mu
// of a common weight.
class SymmetricPoly {
public:
    SymmetricPoly(int m, int degree) : m_(m), degree_(degree) {}

    int m() const { return m_; }
    int degree() const { return degree_; }
    const std::map<IntPartition, Rational>& coeffs() const { return coeffs_; }
    Rational coeff(const IntPartition& mu) const;
    void set_coeff(const IntPartition& mu, const Rational& c);

    SymmetricPoly& operator*=(const Rational& c);
    MPoly expand(const VarSetPtr& xvars) const;  // into ordinary monomials

private:
    int m_;
    int degree_;
    std::map<IntPartition, Rational> coeffs_;
};

// M_lambda: the orbit sum of x^lambda under permutations of the variables.
MPoly monomial_symmetric(const IntPartition& lambda, const VarSetPtr& xvars);

ZonalEigen zonal_eigen(const IntPartition& lambda, int m);

// All zonal polynomials of weight d in m variables, via the recursive formula
// for the coefficients in the monomial symmetric basis, normalized so that
// sum over |lambda| = d of C_lambda equals (x_1 + ... + x_m)^d.
// Results are cached per (d, m); safe for concurrent use.
std::map<IntPartition, SymmetricPoly> zonal_family(int d, int m);

SymmetricPoly zonal_poly(const IntPartition& lambda, int m);

// Applies Delta = sum_i x_i^2 d_i^2 + sum_{i != j} x_i^2/(x_i - x_j) d_i to a
// symmetric polynomial; the (x_i - x_j) denominators cancel exactly.
MPoly apply_delta(const MPoly& f, int m);

bool is_symmetric(const MPoly& f, int m);

struct ZonalAxiomItem {
    IntPartition lambda;
    bool leading_ok = false;      // LM(C_lambda) = x^lambda
    bool eigen_ok = false;        // Delta C = alpha * C
    ZonalEigen eigen;
};

struct ZonalAxiomReport {
    int d = 0;
    int m = 0;
    std::vector<ZonalAxiomItem> items;
    bool sum_ok = false;  // sum of the weight-d family is (x_1+...+x_m)^d
    bool all_ok() const;
};

ZonalAxiomReport verify_zonal_axioms(int d, int m);

}  // namespace mhlab
