#include "toricdiv/cli.hpp"

#include "toricdiv/checks.hpp"
#include "toricdiv/classifier.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace toricdiv {

namespace {

using J = nlohmann::ordered_json;

struct UsageError : Error {
    using Error::Error;
};

unsigned env_workers() {
    const char* v = std::getenv("TORICDIV_WORKERS");
    if (!v || !*v) return 0;
    try {
        long n = std::stol(v);
        if (n < 1) throw UsageError("TORICDIV_WORKERS must be a positive integer");
        return static_cast<unsigned>(n);
    } catch (const std::logic_error&) {
        throw UsageError("TORICDIV_WORKERS must be a positive integer");
    }
}

template <class F>
auto parse_arg(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

J lattice_json(const LatticeVector& v) {
    J a = J::array();
    for (const auto& x : v.coords()) a.push_back(integer_to_json(x));
    return a;
}

J rationals_json(const RationalVector& v) {
    J a = J::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

std::string rationals_text(const RationalVector& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + x.str();
    return "(" + s + ")";
}

int cmd_classify(const std::string& germ_text, long long bound, bool json, bool dump_fan, std::ostream& out) {
    GermSpec germ = parse_arg([&] { return GermSpec::parse(germ_text); });
    if (germ.kind == GermSpec::Kind::SmoothPoint && germ.dim != 3) throw UsageError("classify needs a 3-dimensional germ");
    auto types = enumerate_types(germ, bound);

    J j;
    j["germ"] = germ.str();
    j["bound"] = bound;
    J list = J::array();
    bool ok = true;
    std::ostringstream text;
    text << "germ " << germ.str() << ", bound " << bound << ": " << types.size() << " types\n";
    for (const auto& t : types) {
        auto c = check_conditions(t);
        ok &= c.all();
        Rational g = gamma_tilde_sq(t).value;
        J e;
        e["type"] = t.spelling();
        e["name"] = t.name();
        e["weights"] = t.weights();
        e["conditions"] = J{{"A", c.A}, {"B", c.B}, {"C", c.C}, {"a", c.c_value.str()}};
        e["gamma_tilde_sq"] = g.str();
        list.push_back(e);
        text << "  " << std::left << std::setw(20) << t.spelling() << std::setw(8) << t.name() << " A=" << c.A
             << " B=" << c.B << " C=" << c.C << "  gamma_tilde_sq " << g << "\n";
    }
    j["types"] = list;
    if (germ.kind == GermSpec::Kind::Cyclic) {
        auto o = cyclic_obstruction(germ);
        j["obstruction"] = J{{"weights", rationals_json(o.weights)},
                             {"valuation", lattice_json(o.valuation)},
                             {"boundary", "x1^2+x2^2+x3^2+x1*x2+x1*x3+x2*x3"},
                             {"discrepancy", o.discrepancy.str()}};
        text << "obstruction: weights " << rationals_text(o.weights) << ", D = quadric cone, a(E) = " << o.discrepancy
             << " < 0\n";
    }
    if (dump_fan) j["fan"] = fan_to_json(germ_fan(germ));
    if (json) out << j.dump(2) << "\n";
    else {
        out << text.str();
        if (dump_fan) out << "fan " << fan_to_json(germ_fan(germ)).dump() << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_example(const std::string& type_text, bool json, bool dump_fan, std::ostream& out) {
    ContractionType t = parse_arg([&] { return ContractionType::parse(type_text); });
    auto rep = build_report(t);
    if (json) out << report_to_json(rep, dump_fan).dump(2) << "\n";
    else {
        out << report_to_text(rep);
        if (dump_fan) out << "fan " << fan_to_json(star_subdivide(germ_fan(t.germ()), t.ray())).dump() << "\n";
    }
    return 0;
}

int cmd_check_pair(const std::string& germ_text, const std::string& path, bool json, std::ostream& out) {
    GermSpec germ = parse_arg([&] { return GermSpec::parse(germ_text); });
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read boundary file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    auto spec = parse_arg([&] { return MonomialDivisorSpec::parse(buf.str(), germ.coordinate_count()); });
    auto res = is_canonical_pair_toric(germ, spec);
    ToricGerm tg = toric_germ(germ);

    if (json) {
        J j;
        j["germ"] = germ.str();
        j["canonical"] = res.canonical;
        j["log_canonical"] = res.log_canonical;
        j["klt"] = res.klt;
        j["min_exceptional"] = res.min_exceptional ? J(res.min_exceptional->str()) : J(nullptr);
        if (res.witness) {
            j["witness"] = J{{"ray", lattice_json(*res.witness)},
                             {"weights", rationals_json(coordinate_weights(tg, *res.witness))},
                             {"discrepancy", res.min_exceptional && *res.witness == res.minimizer
                                                 ? J(res.min_exceptional->str())
                                                 : J("unbounded below")}};
        } else {
            j["witness"] = nullptr;
        }
        j["cones_examined"] = res.cones_examined;
        out << j.dump(2) << "\n";
    } else {
        out << "germ " << germ.str() << "\n";
        out << "canonical " << (res.canonical ? "yes" : "no") << "\n";
        out << "log canonical " << (res.log_canonical ? "yes" : "no") << ", klt " << (res.klt ? "yes" : "no") << "\n";
        if (res.min_exceptional)
            out << "min exceptional discrepancy " << *res.min_exceptional << " at " << res.minimizer.str() << "\n";
        else
            out << "exceptional discrepancies unbounded below\n";
        if (res.witness)
            out << "witness " << res.witness->str() << ", weights " << rationals_text(coordinate_weights(tg, *res.witness))
                << "\n";
    }
    return res.canonical ? 0 : 1;
}

int cmd_verify(bool json, unsigned workers, std::ostream& out) {
    auto checks = reference_checks(workers);
    bool ok = true;
    J list = J::array();
    for (const auto& c : checks) {
        ok &= c.passed;
        list.push_back(J{{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        if (!json) {
            std::ostringstream secs;
            secs << std::fixed << std::setprecision(3) << c.seconds;
            out << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  (" << secs.str() << " s)";
            if (!c.passed) out << "  " << c.detail;
            out << "\n";
        }
    }
    if (json) out << J{{"passed", ok}, {"checks", list}}.dump(2) << "\n";
    else out << (ok ? "all checks passed" : "some checks failed") << "\n";
    return ok ? 0 : 1;
}

int cmd_terminal(long long rmax, bool json, unsigned workers, std::ostream& out) {
    if (rmax < 2) throw UsageError("--rmax must be at least 2");
    auto rep = verify_terminal_lemma(rmax, workers);
    if (json) {
        J orders = J::array();
        for (const auto& o : rep.orders) {
            J types = J::array();
            for (const auto& t : o.terminal_types) types.push_back(t.str());
            orders.push_back(J{{"r", o.order}, {"terminal", types}});
        }
        J ce = J::array();
        for (const auto& t : rep.counterexamples) ce.push_back(t.str());
        out << J{{"rmax", rep.r_max}, {"types_checked", rep.types_checked}, {"orders", orders}, {"counterexamples", ce}}
                   .dump(2)
            << "\n";
    } else {
        for (const auto& o : rep.orders) {
            out << "r=" << o.order << ":";
            for (const auto& t : o.terminal_types) out << " " << t.str();
            out << "\n";
        }
        out << rep.types_checked << " types checked, " << rep.counterexamples.size() << " counterexamples\n";
        for (const auto& t : rep.counterexamples) out << "counterexample " << t.str() << "\n";
    }
    return rep.ok() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Divisorial contractions to toric terminal 3-fold germs"};
    app.require_subcommand(1, 1);
    std::string output = "text";
    app.add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    std::string germ = "smooth", type, boundary;
    long long bound = 4, rmax = 10;
    bool dump_fan = false;

    auto* classify = app.add_subcommand("classify", "list the contraction types of a germ");
    classify->add_option("--germ", germ, "smooth, cyclic:R,Q or odp")->capture_default_str();
    classify->add_option("--bound", bound, "parameter bound")->check(CLI::PositiveNumber)->capture_default_str();
    classify->add_flag("--dump-fan", dump_fan, "include the germ fan");

    auto* example = app.add_subcommand("example", "report for one contraction type");
    example->add_option("--type", type, "An:a2,a3,d1[,special], D:n[,special], E6, E7, E8 or odpA:b2,b3,b4")->required();
    example->add_flag("--dump-fan", dump_fan, "include the subdivided fan");

    auto* pair = app.add_subcommand("check-pair", "canonicity of (X, D) for a monomial boundary");
    pair->add_option("--germ", germ, "smooth, smooth2, cyclic:R,Q or odp")->capture_default_str();
    pair->add_option("--boundary", boundary, "file with lines 'coeff; mono+mono+...'")->required();

    auto* verify = app.add_subcommand("verify-paper", "recompute published values");
    auto* terminal = app.add_subcommand("terminal-lemma", "exhaustive terminal quotient sweep");
    terminal->add_option("--rmax", rmax, "largest order")->capture_default_str();

    for (auto* sub : {classify, example, pair, verify, terminal})
        sub->add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, er;
        int code = app.exit(e, o, er);
        out << o.str();
        err << er.str();
        return code == 0 ? 0 : 2;
    }

    const bool json = output == "json";
    try {
        unsigned workers = env_workers();
        if (*classify) return cmd_classify(germ, bound, json, dump_fan, out);
        if (*example) return cmd_example(type, json, dump_fan, out);
        if (*pair) return cmd_check_pair(germ, boundary, json, out);
        if (*verify) return cmd_verify(json, workers, out);
        if (*terminal) return cmd_terminal(rmax, json, workers, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace toricdiv
