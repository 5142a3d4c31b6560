// Command-line front end: single-point evaluation against any representation,
// and reproduction of the built-in verification tables.
//
//   zeta-asym --table B2_thm32 --format csv
//   zeta-asym --method reference --sigma 0.5 --t 100
//   zeta-asym --method sqrt_region --sigma 0.5 --t 100 --eta 25.06 --N 3 --format json

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "za/contour_zeta.hpp"
#include "za/expansions.hpp"
#include "za/oracle.hpp"
#include "za/special.hpp"
#include "za/tables.hpp"

namespace {

int run_tables(const std::string& table_name, const za::Config& cfg, za::TableFormat fmt,
               std::ostream& os) {
    auto id = za::parse_table_id(table_name);
    if (!id) {
        std::cerr << "unknown table id: " << table_name << "\n";
        return 2;
    }
    const za::TableSpec& spec = za::builtin_table(*id);
    std::vector<za::TableCell> cells = za::run_table(spec, cfg);
    os << za::format_cells(*id, cells, fmt);
    double threshold = za::mismatch_threshold(*id);
    for (const auto& c : cells)
        if (!(c.rel_mismatch < za::Real::of(threshold, c.rel_mismatch.prec()))) return 1;
    return 0;
}

struct PointArgs {
    double sigma = 0.5;
    double t = 100.0;
    double eta = 0.0;
    int N = 3;
};

int run_point(const std::string& method, const PointArgs& a, const za::Config& cfg,
              za::TableFormat fmt, std::ostream& os) {
    using namespace za;
    const Prec p = cfg.prec;
    StripPoint s = StripPoint::of(a.sigma, a.t, p);
    Real eta = Real::of(a.eta, p);

    EvalResult result(p);
    bool have_result = false;
    Complex value = Complex::zero(p);

    try {
        if (method == "reference") {
            int digits = static_cast<int>(static_cast<double>(p) * 0.29);
            value = zeta_reference(s.s(), digits);
        } else if (method == "exact") {
            if (a.eta <= 0) throw RegimeViolation("--eta required");
            value = zeta_exact(s, eta, cfg).zeta_s;
        } else if (method == "dirichlet") {
            if (a.eta <= 0) throw RegimeViolation("--eta (used as x) required");
            result = zeta_truncated_dirichlet(s, eta, p);
            value = result.value;
            have_result = true;
        } else if (method == "region1") {
            result = zeta_region1(s, eta, a.N, cfg);
            value = result.value;
            have_result = true;
        } else if (method == "confluent") {
            result = zeta_confluent(s, a.N, cfg);
            value = result.value;
            have_result = true;
        } else if (method == "small_eta") {
            result = zeta_small_eta(s, eta, a.N, cfg);
            value = result.value;
            have_result = true;
        } else if (method == "large_eta_mirror") {
            result = zeta_large_eta_mirror(s, eta, a.N, cfg);
            value = result.value;
            have_result = true;
        } else if (method == "sqrt_region") {
            result = zeta_sqrt_region(s, eta, a.N, cfg);
            value = result.value;
            have_result = true;
        } else if (method == "sqrt_mirror") {
            result = zeta_sqrt_mirror(s, eta, a.N, cfg);
            value = result.value;
            have_result = true;
        } else {
            std::cerr << "unknown method: " << method << "\n";
            return 2;
        }
    } catch (const RegimeViolation& e) {
        nlohmann::json j;
        j["error"] = "regime_violation";
        j["detail"] = e.what();
        j["method"] = method;
        std::cerr << j.dump(2) << "\n";
        return 2;
    }

    if (fmt == TableFormat::json) {
        nlohmann::json j;
        j["method"] = method;
        j["sigma"] = a.sigma;
        j["t"] = a.t;
        if (a.eta > 0) j["eta"] = a.eta;
        j["N"] = a.N;
        j["value_re"] = format_real(value.re());
        j["value_im"] = format_real(value.im());
        if (have_result) {
            j["predicted_error_mag"] = format_real(result.predicted_error_mag);
            j["terms"] = nlohmann::json::array();
            for (const auto& [label, term] : result.terms) {
                nlohmann::json jt;
                jt["label"] = label;
                jt["re"] = format_real(term.re());
                jt["im"] = format_real(term.im());
                j["terms"].push_back(jt);
            }
        }
        os << j.dump(2) << "\n";
    } else if (fmt == TableFormat::csv) {
        os << "method,sigma,t,eta,N,value_re,value_im\n";
        os << method << "," << a.sigma << "," << a.t << "," << a.eta << "," << a.N << ","
           << format_real(value.re()) << "," << format_real(value.im()) << "\n";
    } else {
        os << "zeta(" << a.sigma << " + " << a.t << "i) [" << method
           << "] = " << format_real(value.re()) << " + " << format_real(value.im()) << " i\n";
        if (have_result) {
            os << "predicted error magnitude: " << format_real(result.predicted_error_mag) << "\n";
            for (const auto& [label, term] : result.terms)
                os << "  " << label << ": " << format_real(term.re()) << " + "
                   << format_real(term.im()) << " i\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"extended-precision zeta evaluation in the critical strip"};

    std::string table_name;
    std::string method;
    std::string format = "md";
    std::string out_path;
    PointArgs pa;
    long prec_bits = 0;
    double tol = 1e-40;
    double delta_guard = 1e-3;

    app.add_option("--table", table_name,
                   "run a built-in verification table "
                   "(B1_thm31|B1_partial|B2_thm32|B3_thm4a|B3_HL|B4_cor|B5_thm4b)");
    app.add_option("--method", method,
                   "single-point evaluator (reference|exact|dirichlet|region1|confluent|"
                   "small_eta|large_eta_mirror|sqrt_region|sqrt_mirror)");
    app.add_option("--sigma", pa.sigma, "real part of s");
    app.add_option("--t", pa.t, "imaginary part of s");
    app.add_option("--eta", pa.eta, "splitting parameter eta (or x for dirichlet)");
    app.add_option("--N", pa.N, "expansion order");
    app.add_option("--precision-bits", prec_bits, "working precision in bits");
    app.add_option("--tol", tol, "quadrature tolerance");
    app.add_option("--delta-guard", delta_guard, "minimum distance to 2*pi*Z");
    app.add_option("--format", format, "md|csv|json");
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    za::Config cfg;
    if (prec_bits > 0) {
        cfg.prec = prec_bits;
    } else if (const char* env = std::getenv("ZETA_ASYM_PRECISION_BITS")) {
        long v = std::atol(env);
        if (v >= 64) cfg.prec = v;
    }
    cfg.tol = tol;
    cfg.delta_guard = delta_guard;

    za::TableFormat fmt = za::TableFormat::md;
    if (format == "csv") fmt = za::TableFormat::csv;
    else if (format == "json") fmt = za::TableFormat::json;
    else if (format != "md") {
        std::cerr << "unknown format: " << format << "\n";
        return 2;
    }

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "cannot open " << out_path << "\n";
            return 2;
        }
        os = &file;
    }

    try {
        if (!table_name.empty()) return run_tables(table_name, cfg, fmt, *os);
        if (!method.empty()) return run_point(method, pa, cfg, fmt, *os);
    } catch (const za::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    std::cerr << "nothing to do: pass --table or --method (see --help)\n";
    return 2;
}
