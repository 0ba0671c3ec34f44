#pragma once

// Canonical JSON renderings of certificates, witnesses, verdicts, systems,
// and numeric reports, plus the re-verification dispatcher used by the
// `verify` subcommand. All exact quantities are strings ("p/q", expression
// text, multiplier text); keys are emitted sorted, so identical inputs give
// byte-identical documents.

#include <string>
#include <utility>

#include <json.hpp>

#include "difftrans/certify.hpp"
#include "difftrans/diff_system.hpp"
#include "difftrans/exp_poly.hpp"
#include "difftrans/parse.hpp"
#include "difftrans/solve.hpp"
#include "difftrans/telescope.hpp"
#include "difftrans/verify.hpp"

namespace difftrans {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

inline Json exppoly_to_json(const ExpPoly& f) {
    Json obj = Json::object();
    for (const auto& [mu, coeff] : f.terms()) obj[mu.str()] = ratfunc_str(coeff);
    return obj;
}

inline Json problem_json(const RatFunc& a, const StepH& s) {
    return Json{{"a", ratfunc_str(a)}, {"h", rat_str(s.h)}};
}

inline Json problem_json(const RatFunc& a, const ExpPoly& b, const StepH& s) {
    Json j = problem_json(a, s);
    j["b"] = exppoly_to_json(b);
    return j;
}

inline Json certificate_json(const RatFunc& a, const StepH& s, const Certificate& cert) {
    return Json{{"kind", "certificate"},
                {"problem", problem_json(a, s)},
                {"c", cert.c.str()},
                {"g", ratfunc_str(cert.g)}};
}

inline Json witness_body_json(const ObstructionWitness& w) {
    return Json{{"residual", ratfunc_str(w.residual)},
                {"orbit", Json{{"block", poly_str(w.orbit.block)},
                               {"exponent_sum", w.orbit.exponent_sum.str()}}}};
}

inline Json witness_json(const RatFunc& a, const StepH& s, const ObstructionWitness& w) {
    Json j = witness_body_json(w);
    j["kind"] = "witness";
    j["problem"] = problem_json(a, s);
    return j;
}

inline Json telescope_failure_json(const TelescopeFailure& f) {
    return Json{{"multiplier", f.multiplier.str()},
                {"rhs", ratfunc_str(f.rhs)},
                {"reason", telescope_reason_str(f.reason)}};
}

inline Json verdict_json(const RatFunc& a, const ExpPoly& b, const StepH& s, const Verdict& v) {
    Json j{{"kind", "verdict"}, {"problem", problem_json(a, b, s)}};
    if (v.is_da()) {
        j["verdict"] = "DA";
        j["form"] = Json{{"modulo_periodic", v.form().modulo_periodic},
                         {"value", exppoly_to_json(v.form().value)}};
    } else {
        j["verdict"] = "DT";
        if (v.dt_by_witness())
            j["witness"] = witness_body_json(v.witness());
        else
            j["telescope_failure"] = telescope_failure_json(v.failure());
    }
    return j;
}

inline Json system_json(const DiffSystem& sys) {
    Json rows = Json::array();
    for (const auto& row : sys.matrix()) {
        Json r = Json::array();
        for (const auto& e : row) r.push_back(ratfunc_str(e));
        rows.push_back(std::move(r));
    }
    return Json{{"h", rat_str(sys.step().h)}, {"matrix", std::move(rows)}};
}

inline Json scaled_system_json(const ScaledSystem& sys) {
    Json j = system_json(sys.system);
    j["scale"] = sys.scale.str();
    return j;
}

inline Json numeric_report_json(const NumericReport& r) {
    Json pts = Json::array();
    for (const auto& [x0, steps] : r.sample_points)
        pts.push_back(Json{{"x0", x0}, {"steps", steps}});
    return Json{{"sample_points", std::move(pts)},
                {"max_relative_error", r.max_relative_error},
                {"passed", r.passed}};
}

// ---------------------------------------------------------------------------
// deserialization
// ---------------------------------------------------------------------------

inline ExpPoly exppoly_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("exponential polynomial spec must be a JSON object", 1, 1);
    ExpPoly out;
    for (const auto& [key, val] : j.items()) {
        ExpConst mu = parse_expconst(key);
        RatFunc coeff = parse_ratfunc(val.get<std::string>());
        out += ExpPoly::unit(mu, coeff);
    }
    return out;
}

// CLI b-argument: either inline JSON ({"2": "x"}) or a plain expression with
// implied multiplier 1.
inline ExpPoly exppoly_from_spec(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] == '{') return exppoly_from_json(Json::parse(text));
    return ExpPoly(parse_ratfunc(text));
}

inline DiffSystem system_from_json(const Json& j) {
    if (!j.contains("h") || !j.contains("matrix"))
        throw ParseError("system file needs \"h\" and \"matrix\" fields", 1, 1);
    StepH s(parse_rat(j.at("h").get<std::string>()));
    Matrix m;
    for (const auto& row : j.at("matrix")) {
        std::vector<RatFunc> r;
        for (const auto& e : row) r.push_back(parse_ratfunc(e.get<std::string>()));
        m.push_back(std::move(r));
    }
    return DiffSystem(s, std::move(m));
}

inline Matrix matrix_from_json(const Json& j) {
    const Json& rows = j.is_object() && j.contains("matrix") ? j.at("matrix") : j;
    Matrix m;
    for (const auto& row : rows) {
        std::vector<RatFunc> r;
        for (const auto& e : row) r.push_back(parse_ratfunc(e.get<std::string>()));
        m.push_back(std::move(r));
    }
    return m;
}

// ---------------------------------------------------------------------------
// re-verification of emitted documents
// ---------------------------------------------------------------------------

// True iff the document's claim re-verifies from scratch. Witness and
// telescope-failure claims are checked by reproducing them.
inline bool verify_document(const Json& doc) {
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "certificate") {
        RatFunc a = parse_ratfunc(doc.at("problem").at("a").get<std::string>());
        StepH s(parse_rat(doc.at("problem").at("h").get<std::string>()));
        Certificate cert{parse_expconst(doc.at("c").get<std::string>()),
                         parse_ratfunc(doc.at("g").get<std::string>())};
        return verify_certificate(a, cert, s);
    }
    if (kind == "witness") {
        RatFunc a = parse_ratfunc(doc.at("problem").at("a").get<std::string>());
        StepH s(parse_rat(doc.at("problem").at("h").get<std::string>()));
        CertifyResult r = coboundary_certify(a, s);
        if (!std::holds_alternative<ObstructionWitness>(r)) return false;
        const auto& w = std::get<ObstructionWitness>(r);
        if (ratfunc_str(w.residual) != doc.at("residual").get<std::string>()) return false;
        // residual invariants: nontrivial and fully shift-cancelled
        if (w.residual.is_one()) return false;
        if (w.residual.num().degree() > 0 && w.residual.den().degree() > 0 &&
            !dispersion_set(w.residual.num(), w.residual.den(), s.h).empty())
            return false;
        return w.orbit.exponent_sum != 0;
    }
    if (kind == "verdict") {
        RatFunc a = parse_ratfunc(doc.at("problem").at("a").get<std::string>());
        StepH s(parse_rat(doc.at("problem").at("h").get<std::string>()));
        ExpPoly b = exppoly_from_json(doc.at("problem").at("b"));
        const std::string verdict = doc.at("verdict").get<std::string>();
        if (verdict == "DA") {
            ClosedForm f{exppoly_from_json(doc.at("form").at("value")),
                         doc.at("form").at("modulo_periodic").get<bool>()};
            return verify_closed_form(a, b, f, s);
        }
        if (doc.contains("witness")) {
            CertifyResult r = coboundary_certify(a, s);
            if (!std::holds_alternative<ObstructionWitness>(r)) return false;
            return ratfunc_str(std::get<ObstructionWitness>(r).residual) ==
                   doc.at("witness").at("residual").get<std::string>();
        }
        if (doc.contains("telescope_failure")) {
            const Json& tf = doc.at("telescope_failure");
            ExpConst mu = parse_expconst(tf.at("multiplier").get<std::string>());
            RatFunc rhs = parse_ratfunc(tf.at("rhs").get<std::string>());
            TelescopeResult r = rational_telescope(mu, rhs, s);
            if (!std::holds_alternative<TelescopeFailure>(r)) return false;
            return std::string(telescope_reason_str(std::get<TelescopeFailure>(r).reason)) ==
                   tf.at("reason").get<std::string>();
        }
        return false;
    }
    throw ParseError("unknown document kind '" + kind + "'", 1, 1);
}

}  // namespace difftrans
