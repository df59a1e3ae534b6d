// Command-line front end: single-point computations, grid sweeps over
// exact rational parameters, and the algebra self-check suite.  Every
// report embeds its full configuration and is byte-identical across runs
// with the same configuration.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <thread>

#include "chered/json_io.hpp"

using namespace chered;

namespace {

struct CommonOpts {
    int d = 3;
    std::string c_str;
    std::string k_str;
    std::string rep_str = "triv";
    int cutoff = -1;
    std::string out_path;
    std::string format = "json";
    int threads = 0;
};

void add_param_opts(CLI::App* cmd, CommonOpts& o, bool with_rep = true) {
    cmd->add_option("--d", o.d, "dihedral index d of I2(d), d >= 3")->required();
    cmd->add_option("--c", o.c_str, "parameter c as an exact rational p/q (odd d)");
    cmd->add_option("--k", o.k_str, "parameters k1,k2 as exact rationals p/q,p/q (even d)");
    if (with_rep) cmd->add_option("--rep", o.rep_str, "lowest W-type: triv|sgn|eps1|eps2|tauL");
    cmd->add_option("--out", o.out_path, "write the report here instead of stdout");
    cmd->add_option("--format", o.format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
}

Rat parse_rat_or_die(const std::string& s, const std::string& what) {
    const auto r = parse_rat(s);
    if (!r) throw CLI::ValidationError(what, "expected an exact rational like 3/4 (no decimals)");
    return *r;
}

Params parse_params(const CommonOpts& o) {
    if (o.d % 2 == 1) {
        if (o.c_str.empty()) throw CLI::ValidationError("--c", "odd d needs --c p/q");
        return Params::odd(o.d, parse_rat_or_die(o.c_str, "--c"));
    }
    if (o.k_str.empty()) throw CLI::ValidationError("--k", "even d needs --k p/q,p/q");
    const auto comma = o.k_str.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--k", "expected two rationals separated by a comma");
    return Params::even(o.d, parse_rat_or_die(o.k_str.substr(0, comma), "--k"),
                        parse_rat_or_die(o.k_str.substr(comma + 1), "--k"));
}

Json config_json(const std::string& command, const CommonOpts& o) {
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    j["d"] = o.d;
    if (!o.c_str.empty()) j["c"] = o.c_str;
    if (!o.k_str.empty()) j["k"] = o.k_str;
    j["rep"] = o.rep_str;
    if (o.cutoff >= 0) j["cutoff"] = o.cutoff;
    j["format"] = o.format;
    return j;
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) throw CLI::ValidationError("--out", "cannot open " + o.out_path);
    f << text;
}

void emit_json(const CommonOpts& o, const Json& j) { emit(o, j.dump(2) + "\n"); }

bool text_mode(const CommonOpts& o) { return o.format == "text"; }

std::string classification_text(const Classification& cls) {
    std::ostringstream os;
    os << cls.p.str() << ", rep " << cls.rep.str() << ": case " << cls.case_id;
    if (!(cls.twist == IrrepLabel::triv())) os << " (via " << cls.twist.str() << " twist)";
    os << "\n";
    if (cls.w.r) os << "  r = " << *cls.w.r << "\n";
    if (cls.w.rp) os << "  r' = " << *cls.w.rp << "\n";
    if (cls.w.l) os << "  l = " << *cls.w.l << "\n";
    if (cls.w.i) os << "  i = " << *cls.w.i << "\n";
    if (cls.w.ip) os << "  i' = " << *cls.w.ip << "\n";
    for (const auto& s : cls.singular)
        os << "  singular: " << s.type.str() << " at degree " << s.degree << "\n";
    if (cls.finite) os << "  predicted dim L = " << rat_str(cls.dim) << "\n";
    else os << "  L predicted infinite dimensional\n";
    return os.str();
}

std::string verify_text(const VerifyReport& rep) {
    std::ostringstream os;
    os << classification_text(rep.cls);
    for (const auto& a : rep.assertions)
        os << "  [" << (a.pass ? "ok" : "FAIL") << "] " << a.kind << ": expected " << a.expected
           << ", computed " << a.computed << "\n";
    for (const auto& w : rep.warnings) os << "  [warn] " << w << "\n";
    os << (rep.pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

// All reduced fractions p/q with 1 <= q <= max_den and lo <= p/q <= hi,
// ascending.
std::vector<Rat> rational_grid(const Rat& lo, const Rat& hi, int max_den) {
    std::vector<Rat> out;
    for (int q = 1; q <= max_den; ++q) {
        // ceil(lo*q) .. floor(hi*q)
        const Rat lq = lo * q, hq = hi * q;
        mpz_class pmin, pmax;
        mpz_cdiv_q(pmin.get_mpz_t(), lq.get_num().get_mpz_t(), lq.get_den().get_mpz_t());
        mpz_fdiv_q(pmax.get_mpz_t(), hq.get_num().get_mpz_t(), hq.get_den().get_mpz_t());
        for (mpz_class p = pmin; p <= pmax; ++p) {
            if (mpz_class(gcd(p, mpz_class(q))) != 1) continue;
            Rat r(p, q);
            r.canonicalize();
            out.push_back(r);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct GridRow {
    long idx = 0;
    Params p;
    Classification cls;
    bool verified = false;
    bool pass = true;
    long computed_dim = -1;
};

std::string grid_csv(const std::vector<GridRow>& rows, bool even) {
    std::ostringstream os;
    os << "idx," << (even ? "k1,k2" : "c")
       << ",rep,case,twist,l,r,r_prime,i,i_prime,finite,predicted_dim,verified,computed_dim,pass\n";
    auto opt = [](const auto& x) { return x ? std::to_string(*x) : std::string(); };
    for (const auto& row : rows) {
        os << row.idx << ",";
        if (even) os << rat_str(row.p.k1) << "," << rat_str(row.p.k2) << ",";
        else os << rat_str(row.p.c) << ",";
        os << row.cls.rep.str() << "," << row.cls.case_id << ","
           << (row.cls.twist == IrrepLabel::triv() ? "" : row.cls.twist.str()) << ","
           << opt(row.cls.w.l) << "," << opt(row.cls.w.r) << "," << opt(row.cls.w.rp) << ","
           << opt(row.cls.w.i) << "," << opt(row.cls.w.ip) << ","
           << (row.cls.finite ? "1" : "0") << ","
           << (row.cls.finite ? rat_str(row.cls.dim) : std::string()) << ","
           << (row.verified ? "1" : "0") << ","
           << (row.computed_dim >= 0 ? std::to_string(row.computed_dim) : std::string()) << ","
           << (row.verified ? (row.pass ? "1" : "0") : std::string()) << "\n";
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact standard-module computations for rational Cherednik algebras of I2(d)"};
    app.require_subcommand(1);

    CommonOpts o;
    int exit_code = 0;

    // ---- singular ----------------------------------------------------
    auto* sing = app.add_subcommand("singular", "singular vectors per degree");
    int sing_degree = 0;
    bool print_vectors = false;
    add_param_opts(sing, o);
    sing->add_option("--degree", sing_degree, "single degree (0 = scan to --cutoff)");
    sing->add_option("--cutoff", o.cutoff, "scan degrees 1..cutoff");
    sing->add_flag("--print-vectors", print_vectors, "include rendered basis vectors");
    sing->callback([&] {
        const Params p = parse_params(o);
        StandardModule mod(p, IrrepLabel::parse(o.rep_str));
        if (text_mode(o)) {
            std::ostringstream os;
            const int lo = sing_degree > 0 ? sing_degree : 1;
            const int hi = sing_degree > 0 ? sing_degree : std::max(o.cutoff, 1);
            for (int n = lo; n <= hi; ++n) {
                auto s = mod.singular_vectors(n);
                if (s.dim() == 0) continue;
                os << "degree " << n << ":";
                for (const auto& [type, dim] : s.type_dims)
                    os << " " << type.str() << " (dim " << dim << ")";
                os << "\n";
                if (print_vectors)
                    for (const auto& [type, basis] : s.by_type)
                        for (const auto& v : basis) os << "    " << type.str() << ": " << v.str() << "\n";
            }
            emit(o, os.str());
            return;
        }
        Json j;
        j["config"] = config_json("singular", o);
        Json arr = Json::array();
        const int lo = sing_degree > 0 ? sing_degree : 1;
        const int hi = sing_degree > 0 ? sing_degree : std::max(o.cutoff, 1);
        for (int n = lo; n <= hi; ++n) {
            auto s = mod.singular_vectors(n);
            Json e;
            e["degree"] = n;
            e["dim"] = s.dim();
            Json types = Json::object();
            for (const auto& [type, dim] : s.type_dims) types[type.str()] = dim;
            e["types"] = types;
            if (print_vectors) {
                Json vecs = Json::array();
                for (const auto& [type, basis] : s.by_type)
                    for (const auto& v : basis) vecs.push_back(type.str() + ": " + v.str());
                e["vectors"] = vecs;
            }
            arr.push_back(e);
        }
        j["degrees"] = arr;
        emit_json(o, j);
    });

    // ---- ldims --------------------------------------------------------
    auto* ld = app.add_subcommand("ldims", "graded dimensions of the irreducible quotient L(V)");
    add_param_opts(ld, o);
    ld->add_option("--cutoff", o.cutoff, "degree cutoff")->required();
    ld->callback([&] {
        const Params p = parse_params(o);
        StandardModule mod(p, IrrepLabel::parse(o.rep_str));
        const auto dims = mod.l_graded_dims(o.cutoff);
        if (text_mode(o)) {
            std::ostringstream os;
            os << "h0 = " << rat_str(mod.h0()) << "\ndims:";
            for (long v : dims.dims) os << " " << v;
            os << "\n";
            if (dims.finite) os << "finite, total " << dims.total << "\n";
            else os << "no zero slice within the cutoff\n";
            emit(o, os.str());
            return;
        }
        Json j;
        j["config"] = config_json("ldims", o);
        j["h0"] = rat_str(mod.h0());
        j["dims"] = dims.dims;
        j["finite"] = dims.finite;
        if (dims.finite) j["total"] = dims.total;
        emit_json(o, j);
    });

    // ---- character ----------------------------------------------------
    auto* ch = app.add_subcommand("character", "character series (computed or closed form)");
    std::string ch_kind = "l";
    add_param_opts(ch, o);
    ch->add_option("--cutoff", o.cutoff, "degree cutoff")->required();
    ch->add_option("--kind", ch_kind, "l | standard | theorem")
        ->check(CLI::IsMember({"l", "standard", "theorem"}));
    ch->callback([&] {
        const Params p = parse_params(o);
        const IrrepLabel v = IrrepLabel::parse(o.rep_str);
        Json j;
        j["config"] = config_json("character", o);
        j["kind"] = ch_kind;
        if (ch_kind == "standard") {
            j["series"] = to_json(standard_character(p, v, o.cutoff));
        } else if (ch_kind == "l") {
            StandardModule mod(p, v);
            j["series"] = to_json(mod.l_character(o.cutoff));
        } else {
            const auto cls = classify_params(p, v);
            if (cls.char_case.empty())
                throw CLI::ValidationError("--kind",
                                           "no closed form at this point (case " + cls.case_id + ")");
            j["case"] = cls.char_case;
            j["series"] = to_json(theorem_character(cls.selector(), p, o.cutoff));
        }
        emit_json(o, j);
    });

    // ---- classify -------------------------------------------------------
    auto* cl = app.add_subcommand("classify", "theorem case and predicted structure");
    add_param_opts(cl, o);
    cl->callback([&] {
        const Params p = parse_params(o);
        const auto cls = classify_params(p, IrrepLabel::parse(o.rep_str));
        if (text_mode(o)) {
            emit(o, classification_text(cls));
            return;
        }
        Json j;
        j["config"] = config_json("classify", o);
        j["classification"] = to_json(cls);
        emit_json(o, j);
    });

    // ---- verify ---------------------------------------------------------
    auto* vf = app.add_subcommand("verify", "verify the predicted structure against computation");
    add_param_opts(vf, o);
    vf->add_option("--cutoff", o.cutoff, "degree cutoff (default: per-case policy)");
    vf->callback([&] {
        const Params p = parse_params(o);
        const auto cls = classify_params(p, IrrepLabel::parse(o.rep_str));
        const int cutoff = o.cutoff >= 0 ? o.cutoff : default_cutoff(cls);
        const auto rep = verify_prediction(cls, cutoff);
        if (text_mode(o)) {
            emit(o, verify_text(rep));
        } else {
            Json j;
            j["config"] = config_json("verify", o);
            j["report"] = to_json(rep);
            emit_json(o, j);
        }
        if (!rep.pass) exit_code = 1;
    });

    // ---- verify-grid ------------------------------------------------------
    auto* vg = app.add_subcommand("verify-grid", "classify (and optionally verify) a rational grid");
    int denoms = 4;
    std::string range = "-2..2";
    std::string verify_mode = "none";
    add_param_opts(vg, o);
    vg->add_option("--denoms", denoms, "maximum denominator of grid rationals")->required();
    vg->add_option("--range", range, "inclusive range lo..hi (exact rationals)");
    vg->add_option("--cutoff", o.cutoff, "verification cutoff (default: per-case policy)");
    vg->add_option("--verify", verify_mode, "none | finite | all")
        ->check(CLI::IsMember({"none", "finite", "all"}));
    vg->add_option("--threads", o.threads, "worker threads (0 = hardware)");
    vg->callback([&] {
        const auto dots = range.find("..");
        if (dots == std::string::npos)
            throw CLI::ValidationError("--range", "expected lo..hi");
        const Rat lo = parse_rat_or_die(range.substr(0, dots), "--range");
        const Rat hi = parse_rat_or_die(range.substr(dots + 2), "--range");
        const auto values = rational_grid(lo, hi, denoms);
        const IrrepLabel rep = IrrepLabel::parse(o.rep_str);
        const bool even = (o.d % 2 == 0);

        std::vector<Params> points;
        if (even) {
            points.reserve(values.size() * values.size());
            for (const auto& k1 : values)
                for (const auto& k2 : values) points.push_back(Params::even(o.d, k1, k2));
        } else {
            for (const auto& c : values) points.push_back(Params::odd(o.d, c));
        }

        std::vector<GridRow> rows(points.size());
        auto work = [&](size_t begin, size_t step) {
            for (size_t i = begin; i < points.size(); i += step) {
                GridRow& row = rows[i];
                row.idx = static_cast<long>(i);
                row.p = points[i];
                row.cls = classify_params(points[i], rep);
                const bool want = verify_mode == "all" ||
                                  (verify_mode == "finite" && row.cls.finite);
                if (want) {
                    const int cutoff = o.cutoff >= 0 ? o.cutoff : default_cutoff(row.cls);
                    const auto vrep = verify_prediction(row.cls, cutoff);
                    row.verified = true;
                    row.pass = vrep.pass;
                    row.computed_dim = vrep.l_finite ? vrep.l_total : -1;
                }
            }
        };
        unsigned nthreads = o.threads > 0 ? static_cast<unsigned>(o.threads)
                                          : std::max(1u, std::thread::hardware_concurrency());
        nthreads = std::min<unsigned>(nthreads,
                                      static_cast<unsigned>(std::max<size_t>(points.size(), 1)));
        if (nthreads <= 1) {
            work(0, 1);
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work, t, nthreads);
            for (auto& t : pool) t.join();
        }

        bool all_pass = true;
        for (const auto& row : rows)
            if (row.verified && !row.pass) all_pass = false;

        if (o.format == "csv") {
            Json cfg = config_json("verify-grid", o);
            cfg["denoms"] = denoms;
            cfg["range"] = range;
            cfg["verify"] = verify_mode;
            emit(o, "# " + cfg.dump() + "\n" + grid_csv(rows, even));
        } else {
            Json j;
            j["config"] = config_json("verify-grid", o);
            j["config"]["denoms"] = denoms;
            j["config"]["range"] = range;
            j["config"]["verify"] = verify_mode;
            Json arr = Json::array();
            for (const auto& row : rows) {
                Json e;
                e["idx"] = row.idx;
                e["params"] = to_json(row.p);
                e["case_id"] = row.cls.case_id;
                e["classification"] = to_json(row.cls);
                if (row.verified) {
                    e["pass"] = row.pass;
                    if (row.computed_dim >= 0) e["computed_dim"] = row.computed_dim;
                }
                arr.push_back(e);
            }
            j["points"] = arr;
            j["all_pass"] = all_pass;
            emit_json(o, j);
        }
        if (!all_pass) exit_code = 1;
    });

    // ---- hecke -----------------------------------------------------------
    auto* hk = app.add_subcommand("hecke", "Hecke-algebra representations and intertwiners");
    std::string hom_pair;
    add_param_opts(hk, o);
    hk->add_option("--hom", hom_pair, "a,b: dimension of the intertwiner space Hom(a, b)");
    hk->callback([&] {
        const Params p = parse_params(o);
        Json j;
        j["config"] = config_json("hecke", o);
        if (!hom_pair.empty()) {
            const auto comma = hom_pair.find(',');
            if (comma == std::string::npos)
                throw CLI::ValidationError("--hom", "expected two labels a,b");
            const auto a = build_rep(o.d, IrrepLabel::parse(hom_pair.substr(0, comma)), p);
            const auto b = build_rep(o.d, IrrepLabel::parse(hom_pair.substr(comma + 1)), p);
            j["hom"] = hom_pair;
            j["dim"] = intertwiner_dim(a, b);
        } else {
            const auto rep = build_rep(o.d, IrrepLabel::parse(o.rep_str), p);
            j["rep"] = to_json(rep);
            const bool quad = quadratic_check(rep);
            const bool braid = braid_check(rep);
            j["quadratic"] = quad;
            j["braid"] = braid;
            if (!quad || !braid) exit_code = 1;
        }
        emit_json(o, j);
    });

    // ---- selfcheck ---------------------------------------------------------
    auto* sc = app.add_subcommand("selfcheck", "verify the defining relations on graded slices");
    add_param_opts(sc, o, /*with_rep=*/false);
    sc->add_option("--cutoff", o.cutoff, "check slices 0..cutoff")->required();
    sc->callback([&] {
        const Params p = parse_params(o);
        const auto rep = algebra_relation_check(p, o.cutoff);
        Json j;
        j["config"] = config_json("selfcheck", o);
        j["report"] = to_json(rep);
        emit_json(o, j);
        if (!rep.pass) exit_code = 1;
    });

    // ---- report -------------------------------------------------------------
    auto* rp = app.add_subcommand("report", "per-degree computation record or character table");
    std::string what = "record";
    add_param_opts(rp, o);
    rp->add_option("--cutoff", o.cutoff, "degree cutoff for the record");
    rp->add_option("--what", what, "record | chartable")
        ->check(CLI::IsMember({"record", "chartable"}));
    rp->callback([&] {
        Json j;
        j["config"] = config_json("report", o);
        if (what == "chartable") {
            j["character_table"] = character_table_json(o.d);
        } else {
            const Params p = parse_params(o);
            if (o.cutoff < 0) throw CLI::ValidationError("--cutoff", "the record needs --cutoff");
            j["record"] = computation_record(p, IrrepLabel::parse(o.rep_str), o.cutoff);
        }
        emit_json(o, j);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
