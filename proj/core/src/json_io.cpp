#include "chered/json_io.hpp"

namespace chered {

Json to_json(const Rat& r) { return rat_str(r); }

Json to_json(const Cyc& c) {
    Json j;
    j["order"] = c.order();
    Json coeffs = Json::array();
    for (const auto& x : c.coeffs()) coeffs.push_back(rat_str(x));
    j["coeffs"] = coeffs;
    return j;
}

Json to_json(const Params& p) {
    Json j;
    j["d"] = p.d;
    if (p.is_even) {
        j["k1"] = rat_str(p.k1);
        j["k2"] = rat_str(p.k2);
    } else {
        j["c"] = rat_str(p.c);
    }
    return j;
}

Json to_json(const IrrepLabel& v) { return v.str(); }

Json to_json(const CharacterSeries& s) {
    Json j;
    j["d"] = s.d;
    j["h0"] = rat_str(s.h0);
    j["cutoff"] = s.cutoff;
    Json classes = Json::array();
    const auto cc = conjugacy_classes(s.d);
    for (size_t ci = 0; ci < s.coeffs.size(); ++ci) {
        Json e;
        e["rep"] = cc[ci].rep.str();
        Json coeffs = Json::array();
        for (const auto& c : s.coeffs[ci]) {
            if (c.is_rational()) coeffs.push_back(rat_str(c.rational_value()));
            else coeffs.push_back(to_json(c));
        }
        e["coeffs"] = coeffs;
        classes.push_back(e);
    }
    j["classes"] = classes;
    return j;
}

Json to_json(const Classification& c) {
    Json j;
    j["params"] = to_json(c.p);
    j["rep"] = c.rep.str();
    j["case_id"] = c.case_id;
    Json w;
    if (c.w.r) w["r"] = *c.w.r;
    if (c.w.rp) w["r_prime"] = *c.w.rp;
    if (c.w.l) w["l"] = *c.w.l;
    if (c.w.i) w["i"] = *c.w.i;
    if (c.w.ip) w["i_prime"] = *c.w.ip;
    j["witnesses"] = w;
    if (!(c.twist == IrrepLabel::triv())) j["twist"] = c.twist.str();
    if (c.case_id == "even2dim-iii") j["nested"] = c.nested;
    if (!c.l1_or_l2.empty()) j["line"] = c.l1_or_l2;
    Json sing = Json::array();
    for (const auto& s : c.singular) {
        Json e;
        e["type"] = s.type.str();
        e["degree"] = s.degree;
        e["copies"] = s.copies;
        sing.push_back(e);
    }
    j["predicted_singular"] = sing;
    j["finite"] = c.finite;
    if (c.finite) j["predicted_dim"] = rat_str(c.dim);
    if (!c.char_case.empty()) j["character_case"] = c.char_case;
    return j;
}

Json to_json(const VerifyReport& r) {
    Json j;
    j["classification"] = to_json(r.cls);
    j["cutoff"] = r.cutoff;
    Json as = Json::array();
    for (const auto& a : r.assertions) {
        Json e;
        e["kind"] = a.kind;
        e["expected"] = a.expected;
        e["computed"] = a.computed;
        e["pass"] = a.pass;
        as.push_back(e);
    }
    j["assertions"] = as;
    j["l_dims"] = r.l_dims;
    j["l_finite"] = r.l_finite;
    if (r.l_finite) j["l_total"] = r.l_total;
    if (!r.warnings.empty()) j["warnings"] = r.warnings;
    j["pass"] = r.pass;
    return j;
}

Json to_json(const HeckeRep& r) {
    Json j;
    j["d"] = r.d;
    j["deforms"] = r.deforms.str();
    j["q1"] = to_json(r.q1);
    j["q2"] = to_json(r.q2);
    auto mat = [](const CycMat& m) {
        Json rows = Json::array();
        for (int i = 0; i < m.rows(); ++i) {
            Json row = Json::array();
            for (int c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(i, c)));
            rows.push_back(row);
        }
        return rows;
    };
    j["t1"] = mat(r.t1);
    j["t2"] = mat(r.t2);
    return j;
}

Json to_json(const AlgebraCheckReport& r) {
    Json j;
    j["pass"] = r.pass;
    j["cutoff"] = r.cutoff;
    j["checks_run"] = r.checks_run;
    Json fails = Json::array();
    for (const auto& f : r.failures) {
        Json e;
        e["identity"] = f.identity;
        e["degree"] = f.degree;
        if (!f.detail.empty()) e["detail"] = f.detail;
        fails.push_back(e);
    }
    j["failures"] = fails;
    return j;
}

Json character_table_json(int d) {
    const auto t = character_table(d);
    Json j;
    j["d"] = d;
    Json classes = Json::array();
    for (const auto& c : t.classes) {
        Json e;
        e["rep"] = c.rep.str();
        e["size"] = c.size();
        classes.push_back(e);
    }
    j["classes"] = classes;
    Json rows;
    for (size_t i = 0; i < t.irreps.size(); ++i) {
        Json row = Json::array();
        for (const auto& v : t.values[i]) {
            if (v.is_rational()) row.push_back(rat_str(v.rational_value()));
            else row.push_back(to_json(v));
        }
        rows[t.irreps[i].str()] = row;
    }
    j["characters"] = rows;
    return j;
}

Json computation_record(const Params& p, const IrrepLabel& v, int cutoff) {
    StandardModule mod(p, v);
    Json j;
    j["params"] = to_json(p);
    j["rep"] = v.str();
    j["h0"] = rat_str(mod.h0());
    j["cutoff"] = cutoff;
    Json degrees = Json::array();
    for (int n = 0; n <= cutoff; ++n) {
        Json e;
        e["degree"] = n;
        e["slice_dim"] = mod.dim_slice(n);
        Json sing;
        if (n >= 1) {
            const auto s = mod.singular_vectors(n);
            for (const auto& [type, dim] : s.type_dims) sing[type.str()] = dim;
        }
        e["singular_dims_by_type"] = sing;
        e["gram_rank"] = mod.gram_rank(n);
        degrees.push_back(e);
    }
    j["degrees"] = degrees;
    return j;
}

}  // namespace chered
