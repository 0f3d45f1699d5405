#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptscatter/core.hpp"
#include "ptscatter/nonlocal.hpp"
#include "ptscatter/numeric.hpp"

namespace ptscatter {

/// Generalized parity P_G(x0) reflects about x = x0/2.
struct SymmetryClass {
    bool hermitian = false;
    bool p = false;
    bool p_generalized = false;
    bool t = false;
    bool pt = false;
    std::optional<double> x0;
};

/// Sampled on a grid symmetric about 0 that spans the support.
/// For a local potential hermiticity and T invariance coincide (V real).
SymmetryClass classify_local_potential(const LocalPotential& v, int sample_count = 512,
                                       double tol = 1e-10, bool search_generalized = true);

SymmetryClass to_symmetry_class(const KernelSymmetryClass& k);

struct RelationRecord {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool applicable = true;
    bool holds = false;
    std::string anchor;
};

struct RelationReport {
    std::vector<RelationRecord> relations;

    bool all_hold() const;
    const RelationRecord* find(const std::string& name) const;
};

/// Evaluates every relation implied by the flags in `cls`.  `local` enables the
/// relations that need T_{L->R} = T_{R->L} from the intertwining condition.
/// Generalized-parity relations need `k`.  Relations that presuppose non-zero
/// S elements are reported as not applicable when some |S_ij| < tol, and so are
/// the P, T, HT and PT suites when the symmetry is absent.
RelationReport check_s_relations(const SMatrix& s, const SymmetryClass& cls, bool local,
                                 double tol = 1e-10, std::optional<double> k = std::nullopt);

struct ExactPtResult {
    bool is_exact = false;
    double theta_lr = 0.0;
    double theta_rl = 0.0;
};

/// is_exact iff |R_lr|, |R_rl| < tol and ||T_lr| - 1|, ||T_rl| - 1| < tol.
/// theta_lr = -arg T_lr - 2 alpha_minus and theta_rl = -arg T_rl - 2 beta_plus,
/// wrapped to (-pi, pi]; alpha_minus / beta_plus are the phases of the incident
/// amplitudes A_- and B~_+ (0 for unit incidence).
ExactPtResult exact_asymptotic_pt_check(const SMatrix& s, double tol = 1e-10,
                                        double alpha_minus = 0.0, double beta_plus = 0.0);

double max_unitarity_defect(const SMatrix& s);

}  // namespace ptscatter
