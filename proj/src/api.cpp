#include "qmock/api.hpp"

#include <sstream>

#include "qmock/forms.hpp"
#include "qmock/lerch.hpp"

namespace qmock::api {

Json cyclo_json(const Cyclo& c) {
    Json j;
    j["order"] = c.order();
    Json coeffs = Json::array();
    for (const auto& x : c.coeffs()) coeffs.push_back(rat_str(x));
    j["coeffs"] = coeffs;
    return j;
}

Json qseries_json(const QSeries& s) {
    Json j;
    j["lattice_denominator"] = s.lattice();
    j["truncation"] = s.truncation().str();
    Json terms = Json::array();
    for (const auto& [k, c] : s.terms()) {
        Json t;
        t["exponent"] = std::to_string(k) + "/" + std::to_string(s.lattice());
        t["coefficient"] = cyclo_json(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = terms;
    return j;
}

std::string qseries_csv(const QSeries& s) {
    if (!s.all_coeffs_rational())
        throw rejected_input("CSV output needs rational coefficients");
    std::ostringstream os;
    os << "exponent,coefficient\n";
    for (const auto& [k, c] : s.terms())
        os << rat_str(s.exponent_of(k)) << "," << rat_str(c.rational_value())
           << "\n";
    return os.str();
}

std::string qseries_text(const QSeries& s, size_t max_terms) {
    return s.str(max_terms);
}

Json qrational_json(const QRational& f) {
    Json j;
    Json num = Json::array(), den = Json::array();
    for (const auto& c : f.num()) num.push_back(rat_str(c));
    for (const auto& c : f.den()) den.push_back(rat_str(c));
    j["num"] = num;
    j["den"] = den;
    return j;
}

Json report_json(const IdentityReport& r) {
    Json j;
    j["id"] = r.id;
    j["order"] = rat_str(r.order);
    j["pass"] = r.pass;
    if (r.first_mismatch) {
        Json m;
        m["exponent"] = rat_str(r.first_mismatch->exponent);
        m["lhs"] = cyclo_json(r.first_mismatch->lhs);
        m["rhs"] = cyclo_json(r.first_mismatch->rhs);
        j["first_mismatch"] = m;
    } else {
        j["first_mismatch"] = nullptr;
    }
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

namespace {

std::string complex_str(const Complex& c) { return c.str(17); }

} // namespace

Json residual_json(const LawResidual& r) {
    Json j;
    j["law"] = r.law;
    Json pt;
    pt["tau"] = complex_str(r.point.tau);
    if (r.point.u) pt["u"] = complex_str(*r.point.u);
    if (r.point.v) pt["v"] = complex_str(*r.point.v);
    if (r.point.z) pt["z"] = complex_str(*r.point.z);
    j["point"] = pt;
    j["residual"] = r.residual.str_sci(3);
    j["truncation"] = r.truncation;
    j["prec"] = r.prec_digits;
    j["tolerance"] = r.tolerance.str_sci(3);
    j["pass"] = r.pass;
    j["lhs"] = complex_str(r.lhs);
    j["rhs"] = complex_str(r.rhs);
    return j;
}

const std::vector<std::string>& series_names() {
    static const std::vector<std::string> names = {
        "eta",     "theta1", "theta2", "theta3",  "E2",      "Ek",
        "half_theta", "appell1", "appell2", "appell3", "h1",   "h2",
        "h3",      "g",      "Jk",     "curlyJk"};
    return names;
}

QSeries build_series(const std::string& name, const Rat& order, int k,
                     const std::string& norm) {
    CurlyNorm cn = canonical_curly_norm();
    if (norm == "HALF_SUM")
        cn = CurlyNorm::HALF_SUM;
    else if (norm == "DOUBLE_SUM")
        cn = CurlyNorm::DOUBLE_SUM;
    else if (!norm.empty() && norm != "CANONICAL")
        throw rejected_input("unknown normalization: " + norm);

    if (name == "eta") return eta(order);
    if (name == "theta1") return theta(1, order);
    if (name == "theta2") return theta(2, order);
    if (name == "theta3") return theta(3, order);
    if (name == "E2") return eisenstein(2, order);
    if (name == "Ek") return eisenstein(k, order);
    if (name == "half_theta") return half_theta(order);
    if (name == "appell1") return appell_sum(1, order);
    if (name == "appell2") return appell_sum(2, order);
    if (name == "appell3") return appell_sum(3, order);
    if (name == "h1") return h_series(1, order);
    if (name == "h2") return h_series(2, order);
    if (name == "h3") return h_series(3, order);
    if (name == "g") return g_series(order);
    if (name == "Jk") return jk_series(k, order);
    if (name == "curlyJk") return curly_jk_series(k, order, cn);
    throw rejected_input("unknown series name: " + name);
}

std::vector<IdentityReport> run_identities(const std::string& id_or_all,
                                           const Rat& order, int k) {
    if (id_or_all == "all") return verify_all(order);
    if (id_or_all == "DUALITY") return {verify_duality(k, order)};
    return {verify_identity(id_or_all, order)};
}

Json joyce_table(long n_max, long cap) {
    if (n_max < 1) throw rejected_input("joyce table needs n_max >= 1");
    Json rows = Json::array();
    for (long n = 1; n <= n_max; ++n) {
        Json row;
        row["n"] = n;
        const QRational closed = joyce_closed(n);
        std::ostringstream pretty;
        pretty << "q^" << n * n << "/(" << n << "*(1 - q^" << n << "))";
        row["closed_form"] = pretty.str();
        row["qrational"] = qrational_json(closed);
        if (n <= cap) {
            row["composition_agrees"] =
                (joyce_sum(JoyceParams{2, n}, cap) == closed);
        } else {
            row["composition_agrees"] = nullptr;
        }
        row["residue_at_one"] = rat_str(residue_at_one(closed));
        rows.push_back(std::move(row));
    }
    Json j;
    j["rows"] = rows;
    return j;
}

Json zeta_partial(int k, long n_max, int digits) {
    const Rat exact = zeta_residue_partial(k, n_max);
    Json j;
    j["k"] = k;
    j["n_max"] = n_max;
    j["exact"] = rat_str(exact);
    const EvalCtx ctx = EvalCtx::make(digits);
    j["decimal"] = Real::of(exact, ctx.bits).str(digits);
    return j;
}

Json recursion_report(int n_max) {
    return report_json(qexp_recursion_check(n_max));
}

std::vector<LawResidual> run_laws(const std::string& law_or_all,
                                  const std::vector<Complex>& taus,
                                  int random_count, unsigned long seed,
                                  int digits) {
    std::vector<std::string> ids;
    if (law_or_all == "all") {
        for (const auto& s : law_catalog()) ids.push_back(s.id);
    } else {
        ids.push_back(law_spec(law_or_all).id);
    }
    std::vector<LawResidual> out;
    for (const auto& id : ids) {
        const LawSpec& spec = law_spec(id);
        std::vector<LawPoint> pts;
        if (!taus.empty()) {
            // Explicit tau points; auxiliary components are seeded.
            auto seeded = seeded_points(spec, static_cast<int>(taus.size()),
                                        seed, digits);
            for (size_t i = 0; i < taus.size(); ++i) {
                LawPoint p(taus[i]);
                p.u = seeded[i].u;
                p.v = seeded[i].v;
                p.z = seeded[i].z;
                pts.push_back(std::move(p));
            }
        }
        if (random_count > 0) {
            auto rnd = seeded_points(spec, random_count, seed, digits);
            pts.insert(pts.end(), rnd.begin(), rnd.end());
        }
        if (pts.empty())
            throw rejected_input("no evaluation points: give --tau or --random");
        for (const auto& p : pts) out.push_back(check_law_at(id, p, digits));
    }
    return out;
}

} // namespace qmock::api
