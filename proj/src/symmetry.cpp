#include "ptscatter/symmetry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace ptscatter {

namespace {

using Mat = std::array<std::array<cplx, 2>, 2>;

Mat as_matrix(const SMatrix& s) { return {{{s.s_rr, s.s_rl}, {s.s_lr, s.s_ll}}}; }

Mat multiply(const Mat& a, const Mat& b) {
    Mat c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return c;
}

double identity_defect(const Mat& m) {
    double d = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) d = std::max(d, std::abs(m[i][j] - (i == j ? 1.0 : 0.0)));
    return d;
}

Mat conj(const Mat& m) {
    Mat c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c[i][j] = std::conj(m[i][j]);
    return c;
}

Mat adjoint(const Mat& m) {
    Mat c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c[i][j] = std::conj(m[j][i]);
    return c;
}

double wrap_angle(double a) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    a = std::remainder(a, two_pi);
    if (a <= -std::numbers::pi) a += two_pi;
    return a;
}

class ReportBuilder {
public:
    explicit ReportBuilder(double tol) : tol_(tol) {}

    void add(std::string name, double residual, std::string anchor) {
        report_.relations.push_back(
            {std::move(name), residual, tol_, true, residual <= tol_, std::move(anchor)});
    }

    void skip(std::string name, std::string anchor) {
        report_.relations.push_back({std::move(name), 0.0, tol_, false, false, std::move(anchor)});
    }

    RelationReport take() { return std::move(report_); }

private:
    double tol_;
    RelationReport report_;
};

double symmetric_residual(const LocalPotential& v, double centre, double half_width, int n) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = half_width * (i + 0.5) / n;
        worst = std::max(worst, std::abs(v(centre + u) - v(centre - u)));
    }
    return worst;
}

std::optional<double> find_reflection_centre(const LocalPotential& v, int n, double tol,
                                             const std::vector<double>& xs) {
    const double width = v.x_right - v.x_left;
    auto residual = [&](double c) {
        const double hw = std::max(c - v.x_left, v.x_right - c) + 0.05 * width;
        return symmetric_residual(v, c, hw, n);
    };

    std::vector<double> candidates{0.5 * (v.x_left + v.x_right)};
    double wsum = 0.0;
    double xsum = 0.0;
    for (double x : xs) {
        const double w = std::abs(v(x));
        wsum += w;
        xsum += w * x;
    }
    if (wsum > 0.0) candidates.push_back(xsum / wsum);
    if (!v.breakpoints.empty()) {
        const auto [lo, hi] = std::minmax_element(v.breakpoints.begin(), v.breakpoints.end());
        candidates.push_back(0.5 * (*lo + *hi));
    }
    for (double c : candidates) {
        if (residual(c) <= tol) return c;
    }

    // coarse scan, then golden-section refinement around the best point
    const int scan = 200;
    double best = candidates.front();
    double best_r = residual(best);
    for (int i = 0; i <= scan; ++i) {
        const double c = v.x_left + width * i / scan;
        const double r = residual(c);
        if (r < best_r) {
            best_r = r;
            best = c;
        }
    }
    double a = best - width / scan;
    double b = best + width / scan;
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double c1 = b - g * (b - a);
    double c2 = a + g * (b - a);
    double r1 = residual(c1);
    double r2 = residual(c2);
    for (int it = 0; it < 80 && b - a > 1e-14 * std::max(1.0, std::abs(best)); ++it) {
        if (r1 < r2) {
            b = c2;
            c2 = c1;
            r2 = r1;
            c1 = b - g * (b - a);
            r1 = residual(c1);
        } else {
            a = c1;
            c1 = c2;
            r1 = r2;
            c2 = a + g * (b - a);
            r2 = residual(c2);
        }
    }
    const double c = r1 < r2 ? c1 : c2;
    if (residual(c) <= tol) return c;
    return std::nullopt;
}

}  // namespace

bool RelationReport::all_hold() const {
    return std::all_of(relations.begin(), relations.end(),
                       [](const RelationRecord& r) { return !r.applicable || r.holds; });
}

const RelationRecord* RelationReport::find(const std::string& name) const {
    for (const auto& r : relations) {
        if (r.name == name) return &r;
    }
    return nullptr;
}

SymmetryClass classify_local_potential(const LocalPotential& v, int sample_count, double tol,
                                       bool search_generalized) {
    if (sample_count < 2) throw InvalidParameter("classification needs at least 2 samples");
    const double half = std::max({std::abs(v.x_left), std::abs(v.x_right), 1e-300});
    std::vector<double> xs(static_cast<std::size_t>(sample_count));
    for (int i = 0; i < sample_count; ++i) {
        xs[i] = half * (2.0 * i - (sample_count - 1)) / (sample_count - 1);
    }
    double im_max = 0.0;
    double p_res = 0.0;
    double pt_res = 0.0;
    for (double x : xs) {
        const cplx a = v(x);
        const cplx b = v(-x);
        im_max = std::max(im_max, std::abs(a.imag()));
        p_res = std::max(p_res, std::abs(a - b));
        pt_res = std::max(pt_res, std::abs(a - std::conj(b)));
    }
    SymmetryClass c;
    c.t = im_max < tol;
    c.hermitian = c.t;
    c.p = p_res < tol;
    c.pt = pt_res < tol;
    if (c.p) {
        c.p_generalized = true;
        c.x0 = 0.0;
    } else if (search_generalized && v.x_right > v.x_left) {
        if (auto centre = find_reflection_centre(v, sample_count, tol, xs)) {
            c.p_generalized = true;
            c.x0 = 2.0 * *centre;
        }
    }
    return c;
}

SymmetryClass to_symmetry_class(const KernelSymmetryClass& k) {
    SymmetryClass c;
    c.hermitian = k.hermiticity;
    c.p = k.p;
    c.t = k.t;
    c.pt = k.pt;
    if (k.p) {
        c.p_generalized = true;
        c.x0 = 0.0;
    }
    return c;
}

RelationReport check_s_relations(const SMatrix& s, const SymmetryClass& cls, bool local,
                                 double tol, std::optional<double> k) {
    ReportBuilder out(tol);
    const ScatteringCoefficients c = to_coefficients(s);
    const cplx det = s.det();
    const bool all_nonzero = std::abs(s.s_rr) >= tol && std::abs(s.s_rl) >= tol &&
                             std::abs(s.s_lr) >= tol && std::abs(s.s_ll) >= tol;

    if (cls.p) {
        out.add("P.transmission", std::abs(c.t_lr - c.t_rl), "P: T_lr = T_rl");
        out.add("P.reflection", std::abs(c.r_rl - c.r_lr), "P: R_rl = R_lr");
    } else {
        out.skip("P.transmission", "P: symmetry absent");
        out.skip("P.reflection", "P: symmetry absent");
    }

    if (cls.p_generalized && cls.x0) {
        if (k) {
            const cplx ph = std::exp(kI * (*k * *cls.x0));
            out.add("PG.transmission", std::abs(c.t_lr - c.t_rl), "P_G(x0): T_lr = T_rl");
            out.add("PG.reflection", std::abs(c.r_rl * ph - c.r_lr / ph),
                    "P_G(x0): R_rl e^{ikx0} = R_lr e^{-ikx0}");
        } else {
            out.skip("PG.transmission", "P_G(x0): needs k");
            out.skip("PG.reflection", "P_G(x0): needs k");
        }
    }

    if (cls.t) {
        out.add("T.off_diagonal_rl", std::abs(s.s_rl + std::conj(s.s_lr) * det),
                "T: S_RL + S_LR^* det S = 0");
        out.add("T.off_diagonal_lr", std::abs(s.s_lr + std::conj(s.s_rl) * det),
                "T: S_LR + S_RL^* det S = 0");
        out.add("T.diagonal_ll", std::abs(s.s_ll - std::conj(s.s_ll) * det),
                "T: S_LL = S_LL^* det S");
        out.add("T.diagonal_rr", std::abs(s.s_rr - std::conj(s.s_rr) * det),
                "T: S_RR = S_RR^* det S");
        const char* names[] = {"T.det_modulus", "T.reflection_modulus", "T.transmission_product_real",
                               "T.flux_lr", "T.flux_rl"};
        const char* anchors[] = {"T: |det S| = 1", "T: |R_lr| = |R_rl|",
                                 "T: T_rl T_lr^* real", "T: T_lr T_rl^* + |R_lr|^2 = 1",
                                 "T: T_rl T_lr^* + |R_lr|^2 = 1"};
        if (all_nonzero) {
            const double r2 = std::norm(c.r_lr);
            const double res[] = {std::abs(std::abs(det) - 1.0),
                                  std::abs(std::abs(c.r_lr) - std::abs(c.r_rl)),
                                  std::abs((c.t_rl * std::conj(c.t_lr)).imag()),
                                  std::abs(c.t_lr * std::conj(c.t_rl) + r2 - 1.0),
                                  std::abs(c.t_rl * std::conj(c.t_lr) + r2 - 1.0)};
            for (int i = 0; i < 5; ++i) out.add(names[i], res[i], anchors[i]);
        } else {
            for (int i = 0; i < 5; ++i) out.skip(names[i], anchors[i]);
        }
    } else {
        for (const char* name : {"T.off_diagonal_rl", "T.off_diagonal_lr", "T.diagonal_ll",
                                 "T.diagonal_rr"}) {
            out.skip(name, "T: symmetry absent");
        }
    }

    if (cls.hermitian && cls.t) {
        const Mat m = as_matrix(s);
        out.add("HT.unitarity", identity_defect(multiply(adjoint(m), m)), "H and T: S^dagger S = 1");
        out.add("HT.transmission", std::abs(c.t_lr - c.t_rl), "H and T: T_lr = T_rl");
    } else {
        out.skip("HT.unitarity", "H and T: symmetry absent");
        out.skip("HT.transmission", "H and T: symmetry absent");
    }

    if (cls.pt) {
        const Mat m = as_matrix(s);
        out.add("PT.inverse_conjugate", identity_defect(multiply(m, conj(m))), "PT: S^-1 = S^*");
        out.add("PT.det_modulus", std::abs(std::abs(det) - 1.0), "PT: |det S| = 1");
        out.add("PT.transmission_modulus", std::abs(std::abs(c.t_lr) - std::abs(c.t_rl)),
                "PT: |T_lr| = |T_rl|");
        out.add("PT.reflection_product_real", std::abs((c.r_rl * std::conj(c.r_lr)).imag()),
                "PT: R_rl R_lr^* real");
        if (local) {
            out.add("PT.local.transmission", std::abs(c.t_lr - c.t_rl), "PT, local: T_lr = T_rl");
            if (std::abs(c.t_lr) >= tol && std::abs(c.t_rl) >= tol) {
                out.add("PT.local.reflection_lr",
                        std::abs(c.r_lr + std::conj(c.r_lr) * c.t_lr / std::conj(c.t_lr)),
                        "PT, local: R_lr + R_lr^* T_lr / T_lr^* = 0");
                out.add("PT.local.reflection_rl",
                        std::abs(c.r_rl + std::conj(c.r_rl) * c.t_rl / std::conj(c.t_rl)),
                        "PT, local: R_rl + R_rl^* T_rl / T_rl^* = 0");
            } else {
                out.skip("PT.local.reflection_lr", "PT, local: R_lr + R_lr^* T_lr / T_lr^* = 0");
                out.skip("PT.local.reflection_rl", "PT, local: R_rl + R_rl^* T_rl / T_rl^* = 0");
            }
        }
    } else {
        for (const char* name : {"PT.inverse_conjugate", "PT.det_modulus", "PT.transmission_modulus",
                                 "PT.reflection_product_real"}) {
            out.skip(name, "PT: symmetry absent");
        }
    }
    return out.take();
}

ExactPtResult exact_asymptotic_pt_check(const SMatrix& s, double tol, double alpha_minus,
                                        double beta_plus) {
    const ScatteringCoefficients c = to_coefficients(s);
    ExactPtResult r;
    r.is_exact = std::abs(c.r_lr) < tol && std::abs(c.r_rl) < tol &&
                 std::abs(std::abs(c.t_lr) - 1.0) < tol && std::abs(std::abs(c.t_rl) - 1.0) < tol;
    r.theta_lr = wrap_angle(-std::arg(c.t_lr) - 2.0 * alpha_minus);
    r.theta_rl = wrap_angle(-std::arg(c.t_rl) - 2.0 * beta_plus);
    return r;
}

double max_unitarity_defect(const SMatrix& s) {
    const Mat m = as_matrix(s);
    return identity_defect(multiply(adjoint(m), m));
}

}  // namespace ptscatter
