#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ptscatter/core.hpp"
#include "ptscatter/errors.hpp"
#include "ptscatter/nonlocal.hpp"
#include "ptscatter/numeric.hpp"
#include "ptscatter/potentials.hpp"
#include "ptscatter/symmetry.hpp"

namespace ptscatter::cli {

namespace {

using json = nlohmann::ordered_json;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string potential = "square-well";
    double v0 = 1.0;
    double v1 = 0.5;
    double b = 1.0;
    double a = 0.5;
    int n = 1;
    double s = 1.3;
    double lambda_re = 0.0;
    double lambda_im = 0.7;
    std::optional<double> eps;  // Scarf 0, centrifugal 0.1
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 1.0;
    double delta = 1.0;
    double strength = 1.0;
    double kmin = 0.2;
    double kmax = 4.0;
    int kcount = 50;
    std::string out;
    std::string format = "csv";
    bool parallel = false;
    std::string config;
    double window = 0.0;  // 0 selects the per-potential default
    double threshold = 1e-6;
    int nsweep = 0;
    std::string samples;
    double step = 1e-3;
    std::string method = "rk4";
    double tol = 1e-10;
    double rel_floor = 1e-6;
};

template <class T>
struct is_optional : std::false_type {};
template <class T>
struct is_optional<std::optional<T>> : std::true_type {};

// Flags given on the command line win; everything else may come from --config.
class Binder {
public:
    explicit Binder(CLI::App* app) : app_(app) {}

    template <class T>
    void add(const std::string& name, T& target, const std::string& help) {
        CLI::Option* opt = app_->add_option("--" + name, target, help)->capture_default_str();
        entries_[name] = {opt, [&target](const json& v) {
                              if constexpr (is_optional<T>::value) {
                                  target = v.get<typename T::value_type>();
                              } else {
                                  target = v.get<T>();
                              }
                          }};
    }

    void flag(const std::string& name, bool& target, const std::string& help) {
        CLI::Option* opt = app_->add_flag("--" + name, target, help);
        entries_[name] = {opt, [&target](const json& v) { target = v.get<bool>(); }};
    }

    void apply(const json& cfg) const {
        if (!cfg.is_object()) throw ConfigError("config file must hold a JSON object");
        for (const auto& [key, value] : cfg.items()) {
            auto it = entries_.find(key);
            if (it == entries_.end()) throw ConfigError("unknown config key '" + key + "'");
            if (key == "config") throw ConfigError("config files cannot nest");
            if (it->second.option->count() > 0) continue;
            try {
                it->second.set(value);
            } catch (const json::exception&) {
                throw ConfigError("config key '" + key + "' has the wrong type");
            }
        }
    }

private:
    struct Entry {
        CLI::Option* option;
        std::function<void(const json&)> set;
    };
    CLI::App* app_;
    std::map<std::string, Entry> entries_;
};

void add_options(Binder& b, Options& o) {
    b.add("potential", o.potential,
          "square-well | multi-well | scarf | centrifugal | yamaguchi | custom-sampled");
    b.add("v0", o.v0, "square-well depth");
    b.add("v1", o.v1, "square-well imaginary strength");
    b.add("b", o.b, "square-well half-width");
    b.add("a", o.a, "lattice half-gap");
    b.add("n", o.n, "number of wells");
    b.add("s", o.s, "Scarf s");
    b.add("lambda-re", o.lambda_re, "Scarf Re lambda");
    b.add("lambda-im", o.lambda_im, "Scarf Im lambda");
    b.add("eps", o.eps, "complex shift (Scarf, centrifugal)");
    b.add("alpha", o.alpha, "kernel phase alpha");
    b.add("beta", o.beta, "kernel phase beta");
    b.add("gamma", o.gamma, "Yamaguchi gamma");
    b.add("delta", o.delta, "Yamaguchi delta");
    b.add("strength", o.strength, "kernel lambda, or centrifugal coupling");
    b.add("kmin", o.kmin, "smallest k");
    b.add("kmax", o.kmax, "largest k");
    b.add("kcount", o.kcount, "number of k points");
    b.add("out", o.out, "output file (stdout when empty)");
    b.add("format", o.format, "csv | json");
    b.flag("parallel", o.parallel, "evaluate k points concurrently");
    b.add("config", o.config, "JSON config file");
    b.add("window", o.window, "truncation half-width for the numeric route");
    b.add("threshold", o.threshold, "compare: max tolerated relative difference");
    b.add("nsweep", o.nsweep, "lattice: sweep n = 1..nsweep");
    b.add("samples", o.samples, "custom-sampled: file of x,Re V,Im V rows");
    b.add("step", o.step, "integrator step");
    b.add("method", o.method, "rk4 | adaptive");
    b.add("tol", o.tol, "symmetry relation tolerance");
    b.add("rel-floor", o.rel_floor, "compare: relative-difference floor, times max |S_ij|");
}

enum class Kind { square_well, multi_well, scarf, centrifugal, yamaguchi, custom_sampled };

Kind parse_kind(const std::string& name) {
    static const std::map<std::string, Kind> kinds = {
        {"square-well", Kind::square_well}, {"multi-well", Kind::multi_well},
        {"scarf", Kind::scarf},             {"centrifugal", Kind::centrifugal},
        {"yamaguchi", Kind::yamaguchi},     {"custom-sampled", Kind::custom_sampled}};
    auto it = kinds.find(name);
    if (it == kinds.end()) throw ConfigError("unknown potential '" + name + "'");
    return it->second;
}

struct Samples {
    std::vector<double> x;
    std::vector<cplx> v;
};

Samples read_samples(const std::string& path) {
    if (path.empty()) throw ConfigError("custom-sampled needs --samples");
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open samples file '" + path + "'");
    Samples s;
    std::string line;
    while (std::getline(in, line)) {
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        double x, re, im = 0.0;
        if (!(row >> x >> re)) continue;  // header or blank
        row >> im;
        if (!s.x.empty() && !(x > s.x.back())) {
            throw ConfigError("samples must have strictly increasing x");
        }
        s.x.push_back(x);
        s.v.emplace_back(re, im);
    }
    if (s.x.size() < 2) throw ConfigError("samples file needs at least two rows");
    return s;
}

class Model {
public:
    explicit Model(const Options& o) : o_(o), kind_(parse_kind(o.potential)) {
        if (!(o.step > 0.0)) throw ConfigError("--step must be positive");
        if (o.method == "rk4") {
            integ_.method = IntegrationMethod::rk4;
        } else if (o.method == "adaptive") {
            integ_.method = IntegrationMethod::adaptive;
        } else {
            throw ConfigError("unknown method '" + o.method + "'");
        }
        integ_.step = o.step;
        try {
            build();
        } catch (const InvalidParameter& e) {
            throw ConfigError(e.what());
        } catch (const InvalidNu& e) {
            throw ConfigError(e.what());
        }
    }

    Kind kind() const { return kind_; }
    bool has_analytic() const { return kind_ != Kind::custom_sampled; }
    bool is_local() const { return kind_ != Kind::yamaguchi; }
    const LocalPotential& profile() const { return *profile_; }
    const SeparableKernel& kernel() const { return *kernel_; }

    ScatteringCoefficients analytic(WaveNumber k) const {
        switch (kind_) {
            case Kind::square_well:
                return square_well_coefficients(lattice_.well, k);
            case Kind::multi_well:
                return to_coefficients(smatrix_from_transfer(multi_well_transfer(lattice_, k)));
            case Kind::scarf:
                return scarf_coefficients(scarf_, k);
            case Kind::centrifugal:
                return centrifugal_coefficients(centrifugal_, k);
            case Kind::yamaguchi:
                return nonlocal_coefficients(*kernel_, k, NMethod::closed_form);
            case Kind::custom_sampled:
                break;
        }
        return numeric(k);
    }

    // Direct integration for local potentials; N by quadrature for kernels.
    ScatteringCoefficients numeric(WaveNumber k) const {
        if (kind_ == Kind::yamaguchi) return nonlocal_coefficients(*kernel_, k, NMethod::quadrature);
        return numeric_coefficients(*profile_, k, integ_);
    }

    json describe() const {
        json j;
        j["kind"] = o_.potential;
        switch (kind_) {
            case Kind::square_well:
                j["v0"] = o_.v0;
                j["v1"] = o_.v1;
                j["b"] = o_.b;
                break;
            case Kind::multi_well:
                j["v0"] = o_.v0;
                j["v1"] = o_.v1;
                j["b"] = o_.b;
                j["a"] = o_.a;
                j["n"] = o_.n;
                break;
            case Kind::scarf:
                j["s"] = o_.s;
                j["lambda_re"] = o_.lambda_re;
                j["lambda_im"] = o_.lambda_im;
                j["eps"] = scarf_.eps;
                break;
            case Kind::centrifugal:
                j["strength"] = o_.strength;
                j["eps"] = centrifugal_.eps;
                break;
            case Kind::yamaguchi:
                j["gamma"] = o_.gamma;
                j["delta"] = o_.delta;
                j["alpha"] = o_.alpha;
                j["beta"] = o_.beta;
                j["strength"] = o_.strength;
                break;
            case Kind::custom_sampled:
                j["samples"] = o_.samples;
                break;
        }
        return j;
    }

private:
    void build() {
        lattice_.well = {o_.v0, o_.v1, o_.b};
        lattice_.a = o_.a;
        lattice_.n = o_.n;
        switch (kind_) {
            case Kind::square_well:
                profile_ = square_well_potential(lattice_.well);
                break;
            case Kind::multi_well:
                if (o_.n < 1) throw ConfigError("--n must be at least 1");
                profile_ = lattice_potential(lattice_);
                break;
            case Kind::scarf:
                scarf_ = {o_.s, cplx(o_.lambda_re, o_.lambda_im), o_.eps.value_or(0.0)};
                profile_ = scarf_potential(scarf_, o_.window > 0.0 ? o_.window : 20.0);
                break;
            case Kind::centrifugal:
                centrifugal_ = {o_.strength, o_.eps.value_or(0.1), false};
                centrifugal_.nu();
                profile_ = centrifugal_potential(centrifugal_, o_.window > 0.0 ? o_.window : 50.0);
                break;
            case Kind::yamaguchi:
                kernel_ = yamaguchi_kernel(o_.gamma, o_.delta, o_.alpha, o_.beta, o_.strength);
                break;
            case Kind::custom_sampled: {
                auto data = std::make_shared<Samples>(read_samples(o_.samples));
                LocalPotential v;
                v.x_left = data->x.front();
                v.x_right = data->x.back();
                v.breakpoints = data->x;
                v.evaluate = [data](double x) -> cplx {
                    const auto& xs = data->x;
                    if (x < xs.front() || x > xs.back()) return 0.0;
                    auto hi = std::upper_bound(xs.begin(), xs.end(), x);
                    if (hi == xs.end()) return data->v.back();
                    const std::size_t i = static_cast<std::size_t>(hi - xs.begin());
                    const double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
                    return data->v[i - 1] * (1.0 - t) + data->v[i] * t;
                };
                profile_ = v;
                break;
            }
        }
    }

    Options o_;
    Kind kind_;
    IntegrationConfig integ_;
    LatticeParams lattice_;
    ScarfParams scarf_;
    CentrifugalParams centrifugal_;
    std::optional<LocalPotential> profile_;
    std::optional<SeparableKernel> kernel_;
};

std::vector<double> k_grid(const Options& o) {
    if (!(o.kmin > 0.0) || !std::isfinite(o.kmin)) throw ConfigError("--kmin must be positive");
    if (o.kcount < 1) throw ConfigError("--kcount must be at least 1");
    if (!(o.kmax >= o.kmin) || !std::isfinite(o.kmax)) throw ConfigError("--kmax must be >= --kmin");
    std::vector<double> ks(static_cast<std::size_t>(o.kcount));
    if (o.kcount == 1) {
        ks[0] = o.kmin;
        return ks;
    }
    const double span = o.kmax - o.kmin;
    for (int i = 0; i < o.kcount; ++i) {
        ks[static_cast<std::size_t>(i)] = o.kmin + span * i / (o.kcount - 1);
    }
    ks.back() = o.kmax;
    return ks;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Evaluates f at every k; with `parallel` the points are spread over threads
// but results stay in grid order.  Library errors name the failing k.
template <class R, class F>
std::vector<R> map_k(const std::vector<double>& ks, bool parallel, F f) {
    auto guarded = [&f](double k) -> R {
        try {
            return f(WaveNumber(k));
        } catch (const InvalidParameter& e) {
            throw ConfigError(e.what());
        } catch (const Error& e) {
            throw SolverError("k = " + fmt(k) + ": " + e.what());
        }
    };
    std::vector<R> out;
    out.reserve(ks.size());
    if (!parallel || ks.size() < 2) {
        for (double k : ks) out.push_back(guarded(k));
        return out;
    }
    const std::size_t workers =
        std::min<std::size_t>(ks.size(), std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::future<std::vector<R>>> parts;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = ks.size() * w / workers;
        const std::size_t hi = ks.size() * (w + 1) / workers;
        parts.push_back(std::async(std::launch::async, [&, lo, hi] {
            std::vector<R> chunk;
            for (std::size_t i = lo; i < hi; ++i) chunk.push_back(guarded(ks[i]));
            return chunk;
        }));
    }
    std::optional<std::exception_ptr> first;
    for (auto& p : parts) {
        try {
            for (auto& r : p.get()) out.push_back(std::move(r));
        } catch (...) {
            if (!first) first = std::current_exception();
        }
    }
    if (first) std::rethrow_exception(*first);
    return out;
}

class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : target_(&fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw ConfigError("cannot write '" + path + "'");
            target_ = &file_;
        }
    }
    std::ostream& stream() { return *target_; }

private:
    std::ofstream file_;
    std::ostream* target_;
};

void write_table(std::ostream& os, const std::string& format, const std::string& command,
                 const json& meta, const std::vector<std::string>& columns,
                 const std::vector<std::vector<double>>& rows) {
    if (format == "csv") {
        for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << columns[c];
        os << '\n';
        for (const auto& r : rows) {
            for (std::size_t c = 0; c < r.size(); ++c) os << (c ? "," : "") << fmt(r[c]);
            os << '\n';
        }
        return;
    }
    json doc;
    doc["command"] = command;
    for (const auto& [key, value] : meta.items()) doc[key] = value;
    doc["columns"] = columns;
    json arr = json::array();
    for (const auto& r : rows) {
        json row;
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (std::isfinite(r[c])) {
                row[columns[c]] = r[c];
            } else {
                row[columns[c]] = nullptr;
            }
        }
        arr.push_back(std::move(row));
    }
    doc["rows"] = std::move(arr);
    os << doc.dump(2) << '\n';
}

void check_format(const std::string& format) {
    if (format != "csv" && format != "json") throw ConfigError("--format must be csv or json");
}

int cmd_scan(const Options& o, std::ostream& out) {
    check_format(o.format);
    const Model model(o);
    const auto ks = k_grid(o);
    const auto rows = map_k<std::vector<double>>(ks, o.parallel, [&](WaveNumber k) {
        const ScatteringCoefficients c = model.analytic(k);
        const double det = std::abs(to_smatrix(c).det());
        return std::vector<double>{k.value(),           c.t_lr.real(), c.t_lr.imag(),
                                   c.r_lr.real(),       c.r_lr.imag(), c.t_rl.real(),
                                   c.t_rl.imag(),       c.r_rl.real(), c.r_rl.imag(),
                                   std::norm(c.t_lr),   std::norm(c.r_lr), det,
                                   std::norm(c.t_lr) + std::norm(c.r_lr) - 1.0};
    });
    static const std::vector<std::string> columns = {
        "k",        "t_lr_re",  "t_lr_im",  "r_lr_re",      "r_lr_im",      "t_rl_re",   "t_rl_im",
        "r_rl_re",  "r_rl_im",  "abs_t_lr_sq", "abs_r_lr_sq", "abs_det_s", "unitarity_defect"};
    Sink sink(o.out, out);
    json meta;
    meta["potential"] = model.describe();
    write_table(sink.stream(), o.format, "scan", meta, columns, rows);
    return ExitCode::ok;
}

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

int cmd_compare(const Options& o, std::ostream& out, std::ostream& err) {
    const Model model(o);
    if (!model.has_analytic()) throw ConfigError("compare needs a potential with a closed form");
    const auto ks = k_grid(o);
    struct Point {
        double k;
        ScatteringCoefficients analytic;
        ScatteringCoefficients numeric;
    };
    const auto points = map_k<Point>(ks, o.parallel, [&](WaveNumber k) {
        return Point{k.value(), model.analytic(k), model.numeric(k)};
    });

    json doc;
    doc["command"] = "compare";
    doc["potential"] = model.describe();
    doc["numeric_route"] = model.kind() == Kind::yamaguchi ? "quadrature" : o.method;
    if (model.kind() != Kind::yamaguchi) doc["step"] = o.step;
    doc["threshold"] = o.threshold;
    doc["rel_floor"] = o.rel_floor;
    json arr = json::array();
    std::vector<double> all_abs, all_rel;
    double worst = 0.0, worst_k = ks.front();
    for (const Point& p : points) {
        const cplx a[] = {p.analytic.t_lr, p.analytic.r_lr, p.analytic.t_rl, p.analytic.r_rl};
        const cplx n[] = {p.numeric.t_lr, p.numeric.r_lr, p.numeric.t_rl, p.numeric.r_rl};
        const char* names[] = {"t_lr", "r_lr", "t_rl", "r_rl"};
        double scale = 0.0;
        for (const cplx& z : a) scale = std::max(scale, std::abs(z));
        json row;
        row["k"] = p.k;
        double row_max = 0.0;
        for (int i = 0; i < 4; ++i) {
            const double ad = std::abs(a[i] - n[i]);
            const double rd = ad / std::max(std::abs(a[i]), o.rel_floor * scale);
            all_abs.push_back(ad);
            all_rel.push_back(rd);
            row_max = std::max(row_max, rd);
            row[names[i]] = {{"analytic", {a[i].real(), a[i].imag()}},
                             {"numeric", {n[i].real(), n[i].imag()}},
                             {"abs_diff", ad},
                             {"rel_diff", rd}};
        }
        row["max_rel_diff"] = row_max;
        if (row_max > worst) {
            worst = row_max;
            worst_k = p.k;
        }
        arr.push_back(std::move(row));
    }
    doc["points"] = std::move(arr);
    doc["summary"] = {{"max_abs_diff", *std::max_element(all_abs.begin(), all_abs.end())},
                      {"median_abs_diff", median(all_abs)},
                      {"max_rel_diff", worst},
                      {"median_rel_diff", median(all_rel)},
                      {"worst_k", worst_k}};
    const bool exceeded = !(worst <= o.threshold);
    doc["exceeded"] = exceeded;
    Sink sink(o.out, out);
    sink.stream() << doc.dump(2) << '\n';
    if (exceeded) {
        err << "compare: max relative difference " << fmt(worst) << " at k = " << fmt(worst_k)
            << " exceeds threshold " << fmt(o.threshold) << '\n';
        return ExitCode::threshold_exceeded;
    }
    return ExitCode::ok;
}

int cmd_symmetry(const Options& o, std::ostream& out) {
    const Model model(o);
    const SymmetryClass cls = model.is_local() ? classify_local_potential(model.profile())
                                               : to_symmetry_class(classify_kernel(model.kernel()));
    const auto ks = k_grid(o);
    struct Point {
        double k;
        RelationReport report;
        ExactPtResult exact;
    };
    const auto points = map_k<Point>(ks, o.parallel, [&](WaveNumber k) {
        const SMatrix s = to_smatrix(model.analytic(k));
        return Point{k.value(), check_s_relations(s, cls, model.is_local(), o.tol, k.value()),
                     exact_asymptotic_pt_check(s, o.tol)};
    });

    json doc;
    doc["command"] = "symmetry";
    doc["potential"] = model.describe();
    json c = {{"hermitian", cls.hermitian}, {"p", cls.p},   {"p_generalized", cls.p_generalized},
              {"t", cls.t},                 {"pt", cls.pt}, {"x0", nullptr}};
    if (cls.x0) c["x0"] = *cls.x0;
    doc["class"] = c;
    doc["tolerance"] = o.tol;
    json rel = json::array();
    json exact = json::array();
    bool all_hold = true;
    for (const Point& p : points) {
        for (const RelationRecord& r : p.report.relations) {
            rel.push_back({{"k", p.k},
                           {"name", r.name},
                           {"residual", r.residual},
                           {"applicable", r.applicable},
                           {"holds", r.holds},
                           {"anchor", r.anchor}});
        }
        all_hold = all_hold && p.report.all_hold();
        exact.push_back({{"k", p.k},
                         {"is_exact", p.exact.is_exact},
                         {"theta_lr", p.exact.theta_lr},
                         {"theta_rl", p.exact.theta_rl}});
    }
    doc["all_hold"] = all_hold;
    doc["relations"] = std::move(rel);
    doc["exact_pt"] = std::move(exact);
    Sink sink(o.out, out);
    sink.stream() << doc.dump(2) << '\n';
    return ExitCode::ok;
}

int cmd_lattice(const Options& o, std::ostream& out) {
    check_format(o.format);
    if (o.n < 1) throw ConfigError("--n must be at least 1");
    if (o.nsweep < 0) throw ConfigError("--nsweep must be non-negative");
    LatticeParams base;
    base.well = {o.v0, o.v1, o.b};
    base.a = o.a;
    base.n = o.n;
    const auto ks = k_grid(o);
    std::vector<int> ns;
    if (o.nsweep > 0) {
        for (int n = 1; n <= o.nsweep; ++n) ns.push_back(n);
    } else {
        ns.push_back(o.n);
    }
    const auto per_k = map_k<std::vector<std::vector<double>>>(ks, o.parallel, [&](WaveNumber k) {
        std::vector<std::vector<double>> rows;
        for (int n : ns) {
            LatticeParams p = base;
            p.n = n;
            const double nan = std::numeric_limits<double>::quiet_NaN();
            std::vector<double> row{static_cast<double>(n), k.value(), nan, nan, nan, nan,
                                    nan, nan, nan, 0.0};
            try {
                const TransferMatrix m = multi_well_transfer(p, k);
                const ScatteringCoefficients c = to_coefficients(smatrix_from_transfer(m));
                const cplx det = m.det();
                row[2] = std::abs(c.t_lr);
                row[3] = std::abs(c.r_lr);
                row[4] = std::abs(c.t_rl);
                row[5] = std::abs(c.r_rl);
                row[6] = det.real();
                row[7] = det.imag();
                row[8] = std::norm(c.t_lr) + std::norm(c.r_lr) - 1.0;
            } catch (const TransferOverflow&) {
                row[9] = 1.0;
            }
            rows.push_back(std::move(row));
        }
        return rows;
    });
    std::vector<std::vector<double>> rows;
    for (const auto& block : per_k) {
        for (const auto& r : block) rows.push_back(r);
    }
    // Sweeps read most naturally grouped by n.
    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& x, const auto& y) { return x[0] < y[0]; });
    static const std::vector<std::string> columns = {
        "n", "k", "abs_t_lr", "abs_r_lr", "abs_t_rl", "abs_r_rl", "det_m_re", "det_m_im",
        "unitarity_defect", "overflow"};
    json meta;
    meta["lattice"] = {{"v0", o.v0}, {"v1", o.v1}, {"b", o.b}, {"a", o.a}};
    Sink sink(o.out, out);
    write_table(sink.stream(), o.format, "lattice", meta, columns, rows);
    return ExitCode::ok;
}

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config file '" + path + "': " + e.what());
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"1D scattering for PT-symmetric and non-local potentials", "ptscatter"};
    app.require_subcommand(1);

    struct Sub {
        CLI::App* app;
        Options opts;
        std::unique_ptr<Binder> binder;
    };
    const std::vector<std::pair<std::string, std::string>> names = {
        {"scan", "coefficients over a k grid"},
        {"compare", "closed form against the numeric route"},
        {"symmetry", "classification and relation residuals"},
        {"lattice", "n-well lattice transmission and reflection"}};
    std::vector<Sub> subs(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        subs[i].app = app.add_subcommand(names[i].first, names[i].second);
        subs[i].binder = std::make_unique<Binder>(subs[i].app);
        add_options(*subs[i].binder, subs[i].opts);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ExitCode::ok : ExitCode::config_error;
    }

    for (Sub& sub : subs) {
        if (!sub.app->parsed()) continue;
        const std::string name = sub.app->get_name();
        try {
            if (!sub.opts.config.empty()) sub.binder->apply(load_config(sub.opts.config));
            if (name == "scan") return cmd_scan(sub.opts, out);
            if (name == "compare") return cmd_compare(sub.opts, out, err);
            if (name == "symmetry") return cmd_symmetry(sub.opts, out);
            return cmd_lattice(sub.opts, out);
        } catch (const ConfigError& e) {
            err << name << ": config error: " << e.what() << '\n';
            return ExitCode::config_error;
        } catch (const SolverError& e) {
            err << name << ": solver error at " << e.what() << '\n';
            return ExitCode::solver_error;
        } catch (const InvalidParameter& e) {
            err << name << ": config error: " << e.what() << '\n';
            return ExitCode::config_error;
        } catch (const Error& e) {
            err << name << ": solver error: " << e.what() << '\n';
            return ExitCode::solver_error;
        }
    }
    return ExitCode::config_error;
}

}  // namespace ptscatter::cli
