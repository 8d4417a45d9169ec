// Command-line frontend: height formulas, local Whittaker data, orbit
// counts, f-series, named constants, and the verification suites.
#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "ush/config.hpp"
#include "ush/heights.hpp"
#include "ush/lattice.hpp"
#include "ush/verify.hpp"
#include "ush/whittaker.hpp"

namespace {

using namespace ush;

struct RecordSink {
    bool enabled = false;
    bool header_done = false;
    void emit(const std::string& name, double value, double err, bool rigorous) {
        if (!enabled) return;
        if (!header_done) {
            std::cout << "# ush records v1\n";
            header_done = true;
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.15g\t%.3g", value, err);
        std::cout << name << "\t" << buf << "\t" << (rigorous ? "1" : "0") << "\n";
    }
};

struct FieldOptions {
    std::string field = "builtin:Q";
    std::string ext;
    FieldData resolve() const {
        if (field.rfind("builtin:", 0) == 0) {
            std::string name = field.substr(8);
            long long reld = 1;
            if (!ext.empty()) {
                if (ext.rfind("rel:-", 0) != 0)
                    throw std::runtime_error("--ext expects rel:-<positive integer>");
                reld = std::stoll(ext.substr(5));
                if (reld <= 0) throw std::runtime_error("--ext expects a totally negative value");
            }
            if (name == "Q") return FieldData::imaginary_quadratic(reld);
            if (name.rfind("Q(sqrt", 0) == 0 && name.back() == ')') {
                long long m = std::stoll(name.substr(6, name.size() - 7));
                return FieldData::real_quadratic(m, reld);
            }
            throw std::runtime_error("unknown builtin field '" + name + "'");
        }
        if (!ext.empty())
            throw std::runtime_error("--ext applies only to builtin fields");
        return load_field_config_file(field);
    }
};

Splitting parse_splitting(const std::string& s) {
    if (s == "split") return Splitting::Split;
    if (s == "inert") return Splitting::Inert;
    if (s == "ramified") return Splitting::Ramified;
    throw std::runtime_error("unknown splitting '" + s + "'");
}

SchwartzKind parse_kind(const std::string& s) {
    if (s == "standard") return SchwartzKind::Standard;
    if (s == "dual") return SchwartzKind::Dual;
    if (s == "self-dual") return SchwartzKind::SelfDual;
    throw std::runtime_error("unknown lattice kind '" + s + "'");
}

NormClass parse_class(const std::string& s) {
    if (s == "in") return NormClass::InClass;
    if (s == "out") return NormClass::OutOfClass;
    if (s == "n/a" || s.empty()) return NormClass::NotApplicable;
    throw std::runtime_error("unknown norm class '" + s + "'");
}

void print_report(const HeightReport& rep, RecordSink& records) {
    std::cout << rep.name << "\n";
    std::cout << "  symbolic part: " << rep.formula.sym.str() << " = " << rep.symbolic_part
              << "\n";
    for (const auto& b : rep.lterms) {
        std::cout << "  term " << b.coeff.str() << " * " << b.key.str() << " = "
                  << to_double(b.coeff) * b.value.value << "  (tail " << b.value.tail_bound
                  << (b.value.rigorous ? "" : ", not rigorous") << ")\n";
    }
    std::cout << "  total = " << rep.total << "  error bound " << rep.error_bound
              << (rep.rigorous ? "" : "  [not rigorous]") << "\n";
    for (const auto& a : rep.annotations)
        std::cout << "  note: hypothesis not verified: " << a << "\n";
    records.emit(rep.name, rep.total, rep.error_bound, rep.rigorous);
}

int run(int argc, char** argv) {
    CLI::App app{"local Whittaker functions, Hermitian-lattice counts, and modular heights"};
    app.require_subcommand(1);

    RecordSink records;
    app.add_flag("--records", records.enabled, "emit machine-readable record lines");

    FieldOptions fopts;
    PrecisionControls prec;

    auto add_field_opts = [&](CLI::App* cmd) {
        cmd->add_option("--field", fopts.field, "builtin:Q, builtin:Q(sqrtM), or a config path");
        cmd->add_option("--ext", fopts.ext, "relative extension generator, e.g. rel:-1");
        cmd->add_option("--prime-bound", prec.prime_bound, "Euler product prime bound");
        cmd->add_option("--precision", prec.precision, "target decimal digits");
    };

    // height
    auto* h = app.add_subcommand("height", "modular height of the n-dimensional variety");
    int dim = 1;
    std::string form = "post";
    h->add_option("--dim", dim, "dimension n")->required();
    std::string height_form;
    h->add_option("--form", form, "pre or post (functional equation)");
    add_field_opts(h);
    h->callback([&]() {
        FieldData f = fopts.resolve();
        HeightForm hf = (form == "pre") ? HeightForm::PreFunctionalEquation
                                        : HeightForm::PostFunctionalEquation;
        print_report(modular_height(f, dim, hf, prec), records);
    });

    // cm-height
    auto* ch = app.add_subcommand("cm-height", "height of the CM cycle");
    add_field_opts(ch);
    ch->callback([&]() {
        FieldData f = fopts.resolve();
        print_report(cm_point_height(f, prec), records);
    });

    // whittaker
    auto* wh = app.add_subcommand("whittaker", "local Whittaker closed form and derivatives");
    std::string w_split = "split", w_kind = "standard", w_class;
    long long wN = 2, wr = 0;
    int wn = 1, we = 0;
    long long eval_s = 0;
    bool do_eval = false, do_deriv = false, do_bruteforce = false;
    wh->add_option("--splitting", w_split)->required();
    wh->add_option("--N", wN)->required();
    wh->add_option("--n", wn)->required();
    wh->add_option("--r", wr)->required();
    wh->add_option("--e", we);
    wh->add_option("--lattice", w_kind, "standard, dual, or self-dual");
    wh->add_option("--class", w_class, "in or out (ramified, even n)");
    wh->add_option("--eval", eval_s)->trigger_on_parse();
    wh->add_flag("--deriv", do_deriv);
    wh->add_flag("--bruteforce", do_bruteforce);
    wh->callback([&]() {
        do_eval = wh->count("--eval") > 0;
        WhittakerSpec spec;
        spec.place = LocalPlaceData(wN, parse_splitting(w_split), we, smallest_factor(wN));
        spec.n = wn;
        spec.r = wr;
        spec.schwartz = parse_kind(w_kind);
        spec.norm_class = parse_class(w_class);
        WhittakerForm wf = whittaker_closed_form(spec);
        std::cout << "W(s) " << (wf.half ? "[times N^{-1/2}] " : "") << "= numerator deg "
                  << wf.rf.num.degree() << " / denominator deg " << wf.rf.den.degree() << "\n";
        auto v0 = wf.rf.eval_at_int_s(0);
        std::cout << "  W(0) = " << v0.str() << (wf.half ? " / sqrt(N)" : "") << "\n";
        records.emit("whittaker.value0", to_double(v0) * (wf.half ? 1.0 / std::sqrt((double)wN) : 1.0),
                     0.0, true);
        if (do_eval && eval_s != 0) {
            auto vs = wf.rf.eval_at_int_s(eval_s);
            std::cout << "  W(" << eval_s << ") = " << vs.str() << (wf.half ? " / sqrt(N)" : "")
                      << "\n";
        }
        if (do_deriv) {
            DerivCombo combo = whittaker_deriv_combo(spec);
            std::cout << "  W'(0) - (1/2)log|a| W(0) = " << combo.value.str() << "\n";
            std::cout << "    S-term = " << combo.s_term.str() << "\n";
        }
        if (do_bruteforce) {
            WhittakerForm bf = whittaker_bruteforce_form(spec);
            std::cout << "  enumeration oracle " << (bf == wf ? "matches" : "DIFFERS") << "\n";
            if (!(bf == wf)) throw std::runtime_error("oracle mismatch");
        }
    });

    // orbits
    auto* ob = app.add_subcommand("orbits", "orbit counts of norm-a vectors");
    std::string o_split = "split", o_class;
    long long oN = 2, orr = 0;
    int on = 1;
    bool o_dual = false, o_bruteforce = false;
    ob->add_option("--splitting", o_split)->required();
    ob->add_option("--N", oN)->required();
    ob->add_option("--n", on)->required();
    ob->add_option("--r", orr)->required();
    ob->add_flag("--dual", o_dual);
    ob->add_option("--class", o_class);
    ob->add_flag("--bruteforce", o_bruteforce);
    ob->callback([&]() {
        Splitting sp = parse_splitting(o_split);
        LocalPlaceData place(oN, sp, 0, smallest_factor(oN));
        NormClass cls = parse_class(o_class);
        long long closed = orbit_count_closed(place, on, orr, cls, o_dual);
        std::cout << "orbit count = " << closed << "\n";
        records.emit("orbits.count", (double)closed, 0.0, true);
        if (o_bruteforce) {
            HermitianLatticeModel model;
            model.place = place;
            model.n = on;
            if (sp == Splitting::Ramified)
                model.kind = (on % 2 == 1)
                                 ? (o_dual ? LatticeKind::DualPiModular : LatticeKind::PiModular)
                                 : (o_dual ? LatticeKind::DualAlmostPiModular
                                           : LatticeKind::AlmostPiModular);
            OrbitEnumeration bf = orbit_count_bruteforce(model, orr, cls);
            std::cout << "enumeration: " << bf.count << " labels:";
            for (const auto& l : bf.labels) std::cout << " " << l.str();
            std::cout << "\n";
            if (bf.count != closed) throw std::runtime_error("orbit count mismatch");
        }
    });

    // fseries
    auto* fs = app.add_subcommand("fseries", "local f/S/B series");
    std::string f_split = "inert", f_class;
    long long fN = 3, fr = 0;
    int fn = 1;
    bool f_dual = true;
    fs->add_option("--splitting", f_split)->required();
    fs->add_option("--N", fN)->required();
    fs->add_option("--n", fn)->required();
    fs->add_option("--r", fr)->required();
    fs->add_option("--class", f_class);
    fs->add_flag("--dual,!--standard", f_dual, "dual-lattice convention (default at ramified)");
    fs->callback([&]() {
        Splitting sp = parse_splitting(f_split);
        LocalPlaceData place(fN, sp, 0, smallest_factor(fN));
        NormClass cls = parse_class(f_class);
        ScaledSymbolic f = f_series(place, fn, fr, cls, sp == Splitting::Ramified && f_dual);
        std::cout << "f = " << f.str() << "\n";
        WhittakerSpec wsp;
        wsp.place = place;
        wsp.n = fn;
        wsp.r = fr;
        wsp.norm_class = cls;
        if (sp == Splitting::Ramified && f_dual) wsp.schwartz = SchwartzKind::Dual;
        ScaledSymbolic S = whittaker_s_term(wsp);
        std::cout << "S = " << S.str() << "\n";
        if (sp != Splitting::Split) {
            ScaledSymbolic B = b_series(place, fn, fr, cls, sp == Splitting::Ramified && f_dual);
            std::cout << "B = " << B.str() << "\n";
            std::cout << "f - 2S - B = " << (f - S * Rational(2) - B).str() << "\n";
        } else {
            std::cout << "f - 2S = " << (f - S * Rational(2)).str() << "\n";
        }
    });

    // constants
    auto* cc = app.add_subcommand("constants", "named constants c0/c1/c3/c4/arch-comparison");
    std::string c_kind = "c3";
    int c_n = 1;
    cc->add_option("--kind", c_kind)->required();
    cc->add_option("--n", c_n);
    add_field_opts(cc);
    cc->callback([&]() {
        FieldData f = fopts.resolve();
        NamedConstant kind;
        if (c_kind == "c0") kind = NamedConstant::C0;
        else if (c_kind == "c1") kind = NamedConstant::C1;
        else if (c_kind == "c3") kind = NamedConstant::C3;
        else if (c_kind == "c4-partial") kind = NamedConstant::C4Partial;
        else if (c_kind == "arch-comparison") kind = NamedConstant::ArchComparison;
        else throw std::runtime_error("unknown constant kind '" + c_kind + "'");
        std::vector<LSeriesValue> inputs;
        if (kind == NamedConstant::C0 || kind == NamedConstant::C1)
            inputs.push_back(log_derivative_L(f, 1.0, 1, prec.prime_bound, prec.precision));
        if (kind == NamedConstant::C4Partial) {
            inputs.push_back(
                log_derivative_L(f, (double)(c_n + 1), c_n % 2 ? 2 : 1, prec.prime_bound));
            inputs.push_back(log_derivative_L(f, 1.0, 1, prec.prime_bound, prec.precision));
        }
        ConstantValue v = constant_c(kind, f, c_n, inputs);
        std::cout << c_kind << " = " << v.symbolic.str();
        if (v.l1_coeff != 0) std::cout << " + (" << v.l1_coeff.str() << ")*L'/L(1,eta)";
        if (v.ln1_coeff != 0)
            std::cout << " + (" << v.ln1_coeff.str() << ")*L'/L(" << c_n + 1 << ")";
        std::cout << "\n  numeric = " << v.numeric << " (tail " << v.tail << ")\n";
        records.emit("constants." + c_kind, v.numeric, v.tail, v.rigorous);
    });

    // verify
    auto* vf = app.add_subcommand("verify", "run the verification suites");
    std::string suite = "all", sweep = "small";
    vf->add_option("--suite", suite, "all|whittaker|orbits|identities|heights|archimedean");
    vf->add_option("--sweep", sweep, "small (default acceptance grid)");
    vf->callback([&]() {
        bool small = sweep != "full";
        bool all_pass = true;
        for (int idx : suite_criteria(suite)) {
            for (const auto& res : run_criterion(idx, small)) {
                std::cout << "[" << (res.pass ? "PASS" : "FAIL") << "] criterion " << idx << ": "
                          << res.name;
                if (!res.detail.empty()) std::cout << "  -- " << res.detail;
                std::cout << "\n";
                all_pass = all_pass && res.pass;
                records.emit("verify." + std::to_string(idx), res.pass ? 1.0 : 0.0, 0.0, true);
            }
        }
        if (!all_pass) throw std::runtime_error("verification failure");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
    if (const char* t = std::getenv("SHIMURA_HEIGHT_THREADS")) {
        int nt = std::atoi(t);
        if (nt > 0) omp_set_num_threads(nt);
    }
#endif
    return run(argc, argv);
}
