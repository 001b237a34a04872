// Command-line front end: discover, classify, canonicalize, and numerically
// certify gamma product formulas for f(w) = 2F1(pw+a, qw+b; rw; x).
//
// Exit codes: 0 ok, 1 verification failed, 2 result incomplete,
// 3 precision insufficient, 64 parse error.

#include "gpf/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace gpf;
using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// exact membership test for a given tuple

struct ClassifyResult {
    std::string type;       // typeA / typeB / elementary1 / elementary2 / none / unknown
    bool tested = false;    // whether an exact vanishing test was possible
    bool phi_vanishes = false;
    std::optional<RatFunc<Fe>> R;
};

ClassifyResult classify_lambda(const Lambda& l) {
    ClassifyResult out;
    out.type = elementary_check(l);
    if (!out.type.empty()) return out;

    Lambda red = l;
    try {
        red = reduce_symmetry(l).lam;
    } catch (const std::exception&) {
        out.type = "unknown";
        return out;
    }
    out.type = elementary_check(red);
    if (!out.type.empty()) return out;

    auto integer_triple = [](const Lambda& m) {
        return is_integer(m.p) && is_integer(m.q) && is_integer(m.r);
    };
    auto test_integer = [&](const Lambda& m) -> std::optional<bool> {
        Triple t{floor_int(m.p).get_si(), floor_int(m.q).get_si(), floor_int(m.r).get_si()};
        if (t.q < 1 || t.q > t.p || t.p + t.q > t.r) return std::nullopt;
        if (t.p + t.q < t.r) return phi_poly(t, m.a, m.b, m.x).is_zero();
        return contig_product(t, m.a, m.b, m.x).a12.is_zero();
    };

    if (integer_triple(red)) {
        if (auto v = test_integer(red)) {
            out.tested = true;
            out.phi_vanishes = *v;
            out.type = *v ? "typeA" : "none";
            if (*v) {
                Triple t{floor_int(red.p).get_si(), floor_int(red.q).get_si(),
                         floor_int(red.r).get_si()};
                out.R = t.p + t.q < t.r ? closed_form_R(t, red.a, red.b, red.x)
                                        : closed_form_R_contig(t, red.a, red.b, red.x);
            }
            return out;
        }
        out.type = "unknown";
        return out;
    }
    if (is_half_integer(red.p) && is_half_integer(red.q) && is_integer(red.r)) {
        Lambda dbl{Rat(red.p * 2), Rat(red.q * 2), Rat(red.r * 2), red.a, red.b, red.x};
        if (auto v = test_integer(dbl)) {
            out.tested = true;
            out.phi_vanishes = *v;
            out.type = *v ? "typeB" : "none";
            if (*v) {
                Triple t2{floor_int(dbl.p).get_si(), floor_int(dbl.q).get_si(),
                          floor_int(dbl.r).get_si()};
                Solution big{t2, dbl.p, dbl.q, dbl.r, dbl.a, dbl.b, dbl.x,
                             closed_form_R(t2, dbl.a, dbl.b, dbl.x), "typeA", true};
                if (auto h = undouble(big)) out.R = h->R;
                else out.type = "none";  // the doubled solution does not descend
            }
            return out;
        }
    }
    out.type = "unknown";
    return out;
}

// ---------------------------------------------------------------------------
// built-in verification corpora

const std::vector<std::string> kIntegerRows = {
    "(1,1,4;0,1/4;8/9)",
    "(1,1,4;1/4,1/2;8/9)",
    "(1,1,4;0,1/2;8/9)",
    "(1,1,6;0,1/2;4/5)",
    "(1,1,6;1/6,2/3;4/5)",
    "(2,2,6;0,1/3;3/4*(3-sqrt(3)))",
    "(3,1,6;0,1/6;4*(sqrt(5)-2))",
    "(3,1,6;0,1/2;4*(sqrt(5)-2))",
    "(4,2,8;0,1/4;4*(3*sqrt(2)-4))",
};

const std::vector<std::string> kHalfRows = {
    "(1/2,1/2,3;0,1/2;4/5)",
    "(1/2,1/2,3;1/6,2/3;4/5)",
};

BigFloat verify_tolerance(long prec) { return bf_pow2(-(prec / 2) + 16, prec); }

int verify_rows(const std::vector<std::string>& rows, long prec) {
    BigFloat tol = verify_tolerance(prec);
    bool all_ok = true;
    for (auto& row : rows) {
        Lambda l = parse_lambda(row);
        auto cls = classify_lambda(l);
        json j;
        j["lambda"] = lambda_json(l);
        if (!cls.R) {
            j["ok"] = false;
            j["error"] = "no rational ratio found";
            std::cout << j.dump() << "\n";
            all_ok = false;
            continue;
        }
        BigFloat worst = BigFloat::zero(prec);
        for (double wv : {1.3, 2.7, 5.1}) {
            BigFloat d = ratio_discrepancy(l, *cls.R, BigFloat(wv, prec), prec);
            if (d > worst) worst = d;
        }
        bool ok = worst < tol;
        j["type"] = cls.type;
        j["R"] = rf_s(*cls.R);
        j["discrepancy"] = worst.str(6);
        j["ok"] = ok;
        std::cout << j.dump() << "\n";
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}

int verify_closed_forms(long prec) {
    bool all_ok = true;
    BigFloat tol = verify_tolerance(prec);
    auto report = [&](const char* name, const BigFloat& worst) {
        bool ok = worst < tol;
        json j{{"name", name}, {"discrepancy", worst.str(6)}, {"ok", ok}};
        std::cout << j.dump() << "\n";
        all_ok = all_ok && ok;
    };

    // 2F1(-w/2+3/4, -w/2+5/4; w; -1/3)
    //   = (8/9)^(w-3/2) Gamma(4/3) Gamma(w) / (Gamma(3/2) Gamma(w-1/6))
    {
        Lambda l{rat(-1, 2), rat(-1, 2), Rat(1), Fe(rat(3, 4)), Fe(rat(5, 4)), Fe(rat(-1, 3))};
        BigFloat c = bf_pow(BigFloat(rat(8, 9), prec), BigFloat(rat(-3, 2), prec)) *
                     gamma_fn(BigFloat(rat(4, 3), prec), prec) /
                     gamma_fn(BigFloat(rat(3, 2), prec), prec);
        BigFloat worst = BigFloat::zero(prec);
        for (double wv : {2.0, 3.5, 7.25}) {
            BigFloat w(wv, prec);
            BigFloat lhs = eval_f(l, w, prec);
            BigFloat rhs = c * bf_pow(BigFloat(rat(8, 9), prec), w) * gamma_fn(w, prec) /
                           gamma_fn(w - BigFloat(rat(1, 6), prec), prec);
            BigFloat d = bf_abs(lhs - rhs) / bf_abs(rhs);
            if (d > worst) worst = d;
        }
        report("descending-slope closed form", worst);
    }
    // 2F1(3w-5/6, 3w-1/3; 2w+5/18; 1/9)
    //   = 2^(17/18) 3^(-5/6) (27/16)^w
    //     * Gamma(w+5/36) Gamma(w+23/36) / (Gamma(w+2/9) Gamma(w+5/9))
    // (equivalently 2F1(3v-5/4, 3v-3/4; 2v; 1/9) after v = w + 5/36; it
    // reduces to Kummer's theorem through the quadratic transformation
    // sending the argument -1 to 1/9)
    {
        BigFloat c = bf_pow(BigFloat(Rat(2), prec), BigFloat(rat(17, 18), prec)) /
                     bf_pow(BigFloat(Rat(3), prec), BigFloat(rat(5, 6), prec));
        BigFloat worst = BigFloat::zero(prec);
        for (double wv : {2.0, 3.5, 7.25}) {
            BigFloat w(wv, prec);
            BigFloat three(Rat(3), prec), two(Rat(2), prec);
            BigFloat lhs = gauss_2f1(three * w - BigFloat(rat(5, 6), prec),
                                     three * w - BigFloat(rat(1, 3), prec),
                                     two * w + BigFloat(rat(5, 18), prec),
                                     BigFloat(rat(1, 9), prec), prec)
                               .value;
            BigFloat rhs = c * bf_pow(BigFloat(rat(27, 16), prec), w) *
                           gamma_fn(w + BigFloat(rat(5, 36), prec), prec) *
                           gamma_fn(w + BigFloat(rat(23, 36), prec), prec) /
                           (gamma_fn(w + BigFloat(rat(2, 9), prec), prec) *
                            gamma_fn(w + BigFloat(rat(5, 9), prec), prec));
            BigFloat d = bf_abs(lhs - rhs) / bf_abs(rhs);
            if (d > worst) worst = d;
        }
        report("balanced-slope closed form", worst);
    }
    return all_ok ? 0 : 1;
}

int verify_bailey(long prec) {
    bool all_ok = true;
    BigFloat tol = verify_tolerance(prec);
    for (auto [jj, kk, c] : {std::tuple<long, long, Rat>{2, 1, rat(1, 3)},
                             {3, 1, rat(1, 5)},
                             {3, 2, rat(1, 7)}}) {
        auto g = bailey_gpf(jj, kk, c, prec);
        Lambda l = bailey_lambda(jj, kk, c);
        BigFloat worst = BigFloat::zero(prec);
        for (double wv : {2.0, 3.5}) {
            BigFloat w(wv, prec);
            BigFloat lhs = eval_f(l, w, prec);
            BigFloat rhs = g.constant_num * eval_gamma_product_core(g, w, prec);
            BigFloat d = bf_abs(lhs - rhs) / bf_abs(rhs);
            if (d > worst) worst = d;
        }
        bool ok = worst < tol;
        json j;
        j["jk"] = {jj, kk};
        j["c"] = rat_str(c);
        j["gamma_product"] = gamma_product_json(g);
        j["null_deficiency"] = bailey_null_deficiency(jj, kk, c);
        j["discrepancy"] = worst.str(6);
        j["ok"] = ok;
        std::cout << j.dump() << "\n";
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}

int verify_formula(const std::string& lam, long prec) {
    Lambda l = parse_lambda(lam);
    auto cls = classify_lambda(l);
    json j;
    j["lambda"] = lambda_json(l);
    j["type"] = cls.type;
    if (!cls.R) {
        j["ok"] = false;
        std::cout << j.dump() << "\n";
        return 1;
    }
    BigFloat tol = verify_tolerance(prec);
    BigFloat worst = BigFloat::zero(prec);
    for (double wv : {1.3, 2.7, 5.1}) {
        BigFloat d = ratio_discrepancy(l, *cls.R, BigFloat(wv, prec), prec);
        if (d > worst) worst = d;
    }
    bool ok = worst < tol;
    j["R"] = rf_s(*cls.R);
    j["discrepancy"] = worst.str(6);
    j["ok"] = ok;
    std::cout << j.dump() << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gamma product formulas for 2F1(pw+a, qw+b; rw; x)"};
    app.require_subcommand(1);

    long prec = default_prec();

    // search
    auto* cmd_search = app.add_subcommand("search", "enumerate solvable tuples up to r <= rmax");
    long rmax = 8;
    bool half = false;
    int jobs = 1;
    std::string out_path;
    cmd_search->add_option("--rmax", rmax, "largest denominator slope r");
    cmd_search->add_flag("--half", half, "also descend to half-integer slopes");
    cmd_search->add_option("--jobs", jobs, "reserved; the search runs sequentially");
    cmd_search->add_option("--out", out_path, "write JSON lines here instead of stdout");
    cmd_search->add_option("--prec", prec, "working precision in bits");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "numerically certify known or given formulas");
    std::string builtin, formula;
    cmd_verify->add_option("--builtin", builtin, "table1 | table2 | table3 | bailey");
    cmd_verify->add_option("--formula", formula, "tuple (p,q,r;a,b;x) to verify");
    cmd_verify->add_option("--prec", prec, "working precision in bits");

    // classify
    auto* cmd_classify = app.add_subcommand("classify", "decide the type of a tuple");
    std::string lam_str;
    cmd_classify->add_option("--lam", lam_str, "tuple (p,q,r;a,b;x)")->required();

    // canon
    auto* cmd_canon = app.add_subcommand("canon", "canonical form / gamma product");
    std::string r_str, canon_lam;
    cmd_canon->add_option("--R", r_str, "rational function of w");
    cmd_canon->add_option("--lam", canon_lam, "tuple whose ratio to canonicalize");
    cmd_canon->add_option("--prec", prec, "working precision in bits");

    // asym
    auto* cmd_asym = app.add_subcommand("asym", "saddle-point growth constants");
    std::string asym_lam;
    cmd_asym->add_option("--lam", asym_lam, "tuple (p,q,r;a,b;x)")->required();
    cmd_asym->add_option("--prec", prec, "working precision in bits");

    // residues
    auto* cmd_res = app.add_subcommand("residues", "residues at the candidate poles w_j = -j/r");
    std::string res_lam;
    long jmax = -1;
    cmd_res->add_option("--lam", res_lam, "tuple (p,q,r;a,b;x)")->required();
    cmd_res->add_option("--jmax", jmax, "largest pole index (default 2r)");
    cmd_res->add_option("--prec", prec, "working precision in bits");

    // deficiency
    auto* cmd_def = app.add_subcommand("deficiency", "count of cancelled poles");
    std::string def_lam, def_type;
    cmd_def->add_option("--lam", def_lam, "tuple (p,q,r;a,b;x)")->required();
    cmd_def->add_option("--type", def_type, "typeA or typeB (default: from the slopes)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        if (*cmd_search) {
            auto res = search(rmax, half);
            std::ofstream file;
            if (!out_path.empty()) file.open(out_path);
            std::ostream& os = out_path.empty() ? std::cout : file;
            for (auto& s : res.sols) os << solution_json(s, prec).dump() << "\n";
            for (auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
            return res.complete ? 0 : 2;
        }
        if (*cmd_verify) {
            if (prec < 160) {
                std::cerr << "error: at least 160 bits are needed to certify; "
                          << "raise --prec or GPF_PREC\n";
                return 3;
            }
            if (builtin == "table1") return verify_closed_forms(prec);
            if (builtin == "table2") return verify_rows(kIntegerRows, prec);
            if (builtin == "table3") return verify_rows(kHalfRows, prec);
            if (builtin == "bailey") return verify_bailey(prec);
            if (!builtin.empty()) throw parse_error("unknown builtin: " + builtin);
            if (!formula.empty()) return verify_formula(formula, prec);
            throw parse_error("verify needs --builtin or --formula");
        }
        if (*cmd_classify) {
            Lambda l = parse_lambda(lam_str);
            auto cls = classify_lambda(l);
            json j;
            j["lambda"] = lambda_json(l);
            j["type"] = cls.type;
            j["exactly_tested"] = cls.tested;
            if (cls.R) j["R"] = rf_s(*cls.R);
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*cmd_canon) {
            if (!r_str.empty()) {
                auto rep = canonicalize(parse_ratfunc(r_str));
                json j;
                j["S"] = rf_s(rep.S);
                j["d"] = fe_s(rep.d);
                j["P"] = poly_s(rep.P);
                j["Q"] = poly_s(rep.Q);
                j["complete"] = rep.complete;
                std::cout << j.dump(2) << "\n";
                return rep.complete ? 0 : 2;
            }
            if (!canon_lam.empty()) {
                Lambda l = parse_lambda(canon_lam);
                auto cls = classify_lambda(l);
                if (!cls.R) {
                    std::cerr << "error: tuple admits no rational ratio\n";
                    return 1;
                }
                auto g = assemble_gpf(l, *cls.R, prec);
                json j;
                j["lambda"] = lambda_json(l);
                j["type"] = cls.type;
                j["gamma_product"] = gamma_product_json(g);
                j["constant"] = g.constant_exact ? fe_s(g.constant) : g.constant_num.str(40);
                j["constant_exact"] = g.constant_exact;
                std::cout << j.dump(2) << "\n";
                return 0;
            }
            throw parse_error("canon needs --R or --lam");
        }
        if (*cmd_asym) {
            Lambda l = parse_lambda(asym_lam);
            auto asym = asymptotic_constants(l, prec);
            json j;
            j["lambda"] = lambda_json(l);
            j["t0"] = asym.t0.str(40);
            j["A"] = asym.A.str(40);
            j["B"] = asym.B.str(40);
            try {
                auto d = dilation(l, prec);
                j["d"] = d.exact ? fe_s(d.value) : d.numeric.str(40);
                j["d_exact"] = d.exact;
            } catch (const std::domain_error&) {
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*cmd_res) {
            Lambda l = parse_lambda(res_lam);
            if (!is_integer(l.r) || l.r <= 0)
                throw parse_error("residues: r must be a positive integer");
            long r = floor_int(l.r).get_si();
            if (jmax < 0) jmax = 2 * r;
            for (long j = 0; j <= jmax; ++j) {
                auto res = residue_at(l, j, prec);
                json line;
                line["j"] = j;
                line["w"] = rat_str(rat(-j, r));
                line["C"] = fe_s(res.C);
                line["pole"] = !res.C.is_zero();
                line["value"] = res.value.str(40);
                std::cout << line.dump() << "\n";
            }
            auto ps = pole_structure(l.p, l.q, l.r,
                                     l.a.is_rational() ? l.a.a : Rat(0),
                                     l.b.is_rational() ? l.b.a : Rat(0));
            json tail{{"tail_start", residue_tail_start(l)},
                      {"delta", rat_str(ps.delta)}};
            std::cout << tail.dump() << "\n";
            return 0;
        }
        if (*cmd_def) {
            Lambda l = parse_lambda(def_lam);
            if (def_type.empty())
                def_type = is_integer(l.p) && is_integer(l.q) ? "typeA" : "typeB";
            json j;
            j["lambda"] = lambda_json(l);
            try {
                auto d = deficiency(l, def_type);
                j["type"] = def_type;
                j["case"] = d.kase;
                j["N"] = d.N;
                auto ps = pole_structure(l.p, l.q, l.r, l.a.a, l.b.a);
                j["delta"] = rat_str(ps.delta);
                std::cout << j.dump(2) << "\n";
                return 0;
            } catch (const deficiency_error& e) {
                j["error"] = e.what();
                std::cout << j.dump(2) << "\n";
                return 1;
            }
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
