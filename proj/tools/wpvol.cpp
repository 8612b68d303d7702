#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wpvol/render.hpp"
#include "wpvol/serialize.hpp"

namespace {

using namespace wpvol;

struct GlobalOpts {
    std::string curve = "wp";
    std::string times_file;
    int truncation = 0;  // 0 = pick automatically from the request
    std::string cache_dir;
    int threads = 1;
    std::string format = "text";
    int digits = 10;
};

SpectralCurve make_curve(const GlobalOpts& o, int max_kernel_order) {
    if (!o.times_file.empty()) return curve_from_times(load_times_file(o.times_file));
    if (o.curve != "wp")
        throw std::invalid_argument("unknown curve preset \"" + o.curve + "\" (try wp or --times)");
    int needed = 2 * std::max(max_kernel_order, 0) + 1;
    return wp_curve(o.truncation > 0 ? o.truncation : needed);
}

EngineOptions engine_opts(const GlobalOpts& o) {
    EngineOptions e;
    if (!o.cache_dir.empty()) e.cache_dir = o.cache_dir;
    e.threads = o.threads;
    return e;
}

void emit(const std::string& s) { std::cout << s << "\n"; }

std::vector<Rational> parse_lengths(const std::vector<std::string>& raw) {
    std::vector<Rational> out;
    out.reserve(raw.size());
    for (const auto& s : raw) out.push_back(Rational::from_string(s));
    return out;
}

int run_correlator(int g, int n, const GlobalOpts& o) {
    Engine eng(make_curve(o, dimension(g, n)), engine_opts(o));
    const CorrelatorPoly& w = eng.correlator(g, n);
    if (o.format == "json")
        emit(to_json(w).dump(2));
    else if (o.format == "latex")
        emit(render_latex(w));
    else
        emit(render_text(w));
    return 0;
}

int run_volume(int g, int n, Convention conv, const std::vector<std::string>& lengths_raw,
               const GlobalOpts& o) {
    Engine eng(make_curve(o, dimension(g, n)), engine_opts(o));
    VolumePoly v = to_volume(eng.correlator(g, n), conv);
    if (lengths_raw.empty()) {
        if (o.format == "json")
            emit(to_json(v).dump(2));
        else if (o.format == "latex")
            emit(render_latex(v));
        else
            emit(render_text(v));
        return 0;
    }
    auto lengths = parse_lengths(lengths_raw);
    PiScalar exact = evaluate_volume_exact(v, lengths);
    if (o.format == "json") {
        json j;
        j["g"] = g;
        j["n"] = n;
        j["kind"] = "volume_value";
        j["convention"] = conv == Convention::paper ? "paper" : "identity";
        j["lengths"] = lengths_raw;
        j["value_exact"] = exact.to_string();
        j["value"] = exact.eval_decimal(o.digits);
        emit(j.dump(2));
    } else if (o.format == "latex") {
        emit(render_latex(exact));
    } else {
        emit(exact.eval_decimal(o.digits));
    }
    return 0;
}

int run_closed_volume(int g, const GlobalOpts& o) {
    Engine eng(make_curve(o, dimension(g, 1)), engine_opts(o));
    PiScalar value = closed_volume(eng, g);
    if (o.format == "json") {
        json j;
        j["g"] = g;
        j["kind"] = "closed_volume";
        j["value"] = value.to_string();
        emit(j.dump(2));
    } else if (o.format == "latex") {
        emit(render_latex(value));
    } else {
        emit(value.to_string());
    }
    return 0;
}

int run_intersections(int g, int n, const GlobalOpts& o) {
    Engine eng(make_curve(o, dimension(g, n)), engine_opts(o));
    IntersectionTable t = intersection_numbers(to_volume(eng.correlator(g, n)));
    if (o.format == "json")
        emit(to_json(t).dump(2));
    else if (o.format == "latex")
        emit(render_latex(t));
    else
        emit(render_text(t));
    return 0;
}

int run_check(int g, int n, const GlobalOpts& o) {
    Engine eng(make_curve(o, dimension(g, n + 1)), engine_opts(o));
    DilatonReport rv = dilaton_check_V(eng, g, n);
    DilatonReport rw = dilaton_check_W(eng, g, n);
    bool latex = o.format == "latex";

    auto vol_str = [&](const NVarPoly& p) {
        VolumePoly v{g, Convention::identity, p};
        return latex ? render_latex(v) : render_text(v);
    };
    auto cor_str = [&](const NVarPoly& p) {
        CorrelatorPoly w{g, p};
        return latex ? render_latex(w) : render_text(w);
    };

    if (o.format == "json") {
        json j;
        j["g"] = g;
        j["n"] = n;
        j["dilaton_V"] = {{"holds", rv.holds},
                          {"lhs", vol_str(rv.lhs)},
                          {"rhs", vol_str(rv.rhs)}};
        j["dilaton_W"] = {{"holds", rw.holds},
                          {"sign", rw.sign},
                          {"lhs", cor_str(rw.lhs)},
                          {"rhs", cor_str(rw.rhs)}};
        emit(j.dump(2));
    } else {
        std::string line = std::string("dilaton-V: ") + (rv.holds ? "holds" : "FAILS") +
                           "; dilaton-W: " + (rw.holds ? "holds" : "FAILS") + " (SIGN=-1)";
        emit(line);
        if (!rv.holds) {
            emit("  dilaton-V lhs = " + vol_str(rv.lhs));
            emit("  dilaton-V rhs = " + vol_str(rv.rhs));
        }
        if (!rw.holds) {
            emit("  dilaton-W lhs = " + cor_str(rw.lhs));
            emit("  dilaton-W rhs = " + cor_str(rw.rhs));
        }
    }
    return rv.holds && rw.holds ? 0 : 3;
}

struct RefTerm {
    std::vector<int> d;
    const char* coeff;
};

struct RefPoly {
    int g, n;
    std::vector<RefTerm> terms;
};

// Built-in reference values for the low-order correlators and the first
// closed-surface volume, used to confirm a build end to end.
const std::vector<RefPoly>& reference_correlators() {
    static const std::vector<RefPoly> refs = {
        {0, 3, {{{0, 0, 0}, "1"}}},
        {1, 1, {{{1}, "1/8"}, {{0}, "1/12*pi^2"}}},
        {0, 4, {{{1, 0, 0, 0}, "3"}, {{0, 0, 0, 0}, "2*pi^2"}}},
        {1,
         2,
         {{{2, 0}, "5/8"}, {{1, 1}, "3/8"}, {{1, 0}, "1/2*pi^2"}, {{0, 0}, "1/4*pi^4"}}},
        {0,
         5,
         {{{2, 0, 0, 0, 0}, "15"},
          {{1, 1, 0, 0, 0}, "18"},
          {{1, 0, 0, 0, 0}, "18*pi^2"},
          {{0, 0, 0, 0, 0}, "10*pi^4"}}},
        {2,
         1,
         {{{4}, "105/128"},
          {{3}, "203/192*pi^2"},
          {{2}, "139/192*pi^4"},
          {{1}, "169/480*pi^6"},
          {{0}, "29/192*pi^8"}}},
    };
    return refs;
}

int run_selftest(const GlobalOpts& o) {
    GlobalOpts wp = o;
    wp.curve = "wp";
    wp.times_file.clear();
    Engine eng(make_curve(wp, dimension(2, 1)), engine_opts(wp));

    int failures = 0;
    for (const auto& ref : reference_correlators()) {
        NVarPoly expected;
        expected.n = ref.n;
        for (const auto& t : ref.terms) expected.add(t.d, PiScalar::from_string(t.coeff));
        const CorrelatorPoly& got = eng.correlator(ref.g, ref.n);
        std::string label = "W^" + std::to_string(ref.g) + "_" + std::to_string(ref.n);
        if (got.p == expected) {
            emit("ok       " + label);
        } else {
            ++failures;
            emit("MISMATCH " + label);
            emit("  expected " + render_text(CorrelatorPoly{ref.g, expected}));
            emit("  got      " + render_text(got));
        }
    }

    PiScalar v20 = closed_volume(eng, 2);
    PiScalar v20_ref = PiScalar::from_string("43/2160*pi^6");
    if (v20 == v20_ref) {
        emit("ok       V_{2,0}");
    } else {
        ++failures;
        emit("MISMATCH V_{2,0}");
        emit("  expected " + v20_ref.to_string());
        emit("  got      " + v20.to_string());
    }

    if (failures == 0) {
        emit("selftest: 7/7 reference values match");
        return 0;
    }
    emit("selftest: " + std::to_string(failures) + " mismatch(es)");
    return 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weil-Petersson volume polynomials, correlators, and intersection numbers"};
    app.require_subcommand(1);

    GlobalOpts opts;
    app.add_option("--curve", opts.curve, "Curve preset (wp)")->capture_default_str();
    auto* times_opt =
        app.add_option("--times", opts.times_file, "JSON file of Kontsevich times");
    app.get_option("--curve")->excludes(times_opt);
    app.add_option("--truncation", opts.truncation,
                   "Highest curve coefficient order to carry (default: automatic)")
        ->check(CLI::PositiveNumber);
    app.add_option("--cache-dir", opts.cache_dir, "Directory for correlator cache files");
    app.add_option("--threads", opts.threads, "Worker threads for independent computations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "latex"}))
        ->capture_default_str();
    app.add_option("--digits", opts.digits, "Decimal places for numeric output")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    int g = 0, n = 0;
    std::string convention = "identity";
    std::vector<std::string> lengths;

    auto* c_cor = app.add_subcommand("correlator", "Print the correlator W^g_n");
    c_cor->add_option("g", g, "Genus")->required();
    c_cor->add_option("n", n, "Number of boundaries")->required();

    auto* c_vol = app.add_subcommand("volume", "Print the volume polynomial V_{g,n}");
    c_vol->add_option("g", g, "Genus")->required();
    c_vol->add_option("n", n, "Number of boundaries")->required();
    c_vol->add_option("--convention", convention, "Normalization convention")
        ->check(CLI::IsMember({"identity", "paper"}))
        ->capture_default_str();
    c_vol->add_option("--lengths", lengths, "Evaluate at these boundary lengths (rationals)");

    auto* c_cls = app.add_subcommand("closed-volume", "Print the closed-surface volume V_{g,0}");
    c_cls->add_option("g", g, "Genus (>= 2)")->required();

    auto* c_int = app.add_subcommand("intersections", "Print kappa_1/psi intersection numbers");
    c_int->add_option("g", g, "Genus")->required();
    c_int->add_option("n", n, "Number of marked points")->required();

    auto* c_chk = app.add_subcommand("check", "Run both dilaton-type identities at (g,n)");
    c_chk->add_option("g", g, "Genus")->required();
    c_chk->add_option("n", n, "Number of boundaries")->required();

    auto* c_self = app.add_subcommand("selftest", "Recompute built-in reference values");
    for (auto* sub : {c_cor, c_vol, c_cls, c_int, c_chk, c_self}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (c_cor->parsed()) return run_correlator(g, n, opts);
        if (c_vol->parsed())
            return run_volume(g, n,
                              convention == "paper" ? Convention::paper : Convention::identity,
                              lengths, opts);
        if (c_cls->parsed()) return run_closed_volume(g, opts);
        if (c_int->parsed()) return run_intersections(g, n, opts);
        if (c_chk->parsed()) return run_check(g, n, opts);
        if (c_self->parsed()) return run_selftest(opts);
        std::cerr << app.help();
        return 2;
    } catch (const identity_violation& e) {
        std::cerr << "identity violation: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
