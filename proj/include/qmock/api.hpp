#pragma once

#include <nlohmann/json.hpp>

#include "qmock/catalog.hpp"
#include "qmock/joyce.hpp"
#include "qmock/laws.hpp"

namespace qmock::api {

using Json = nlohmann::ordered_json;

// Serialization of the core value types. JSON is the canonical machine
// format; identical inputs yield byte-identical output.
Json cyclo_json(const Cyclo& c);
Json qseries_json(const QSeries& s);
std::string qseries_csv(const QSeries& s); // rational coefficients only
std::string qseries_text(const QSeries& s, size_t max_terms = 40);
Json qrational_json(const QRational& f);
Json report_json(const IdentityReport& r);
Json residual_json(const LawResidual& r);

// Named series constructors behind `series <name>`; k feeds Ek/Jk/curlyJk,
// norm selects the curly-J normalization ("HALF_SUM" / "DOUBLE_SUM" /
// "" = canonical).
const std::vector<std::string>& series_names();
QSeries build_series(const std::string& name, const Rat& order, int k,
                     const std::string& norm);

// identity <id|all>; DUALITY takes the weight k.
std::vector<IdentityReport> run_identities(const std::string& id_or_all,
                                           const Rat& order, int k);

// joyce table rows 1..n_max with composition agreement up to `cap`.
Json joyce_table(long n_max, long cap);
Json zeta_partial(int k, long n_max, int digits);
Json recursion_report(int n_max);

// numeric <law|all> at explicit points and/or seeded random points.
std::vector<LawResidual> run_laws(const std::string& law_or_all,
                                  const std::vector<Complex>& taus,
                                  int random_count, unsigned long seed,
                                  int digits);

} // namespace qmock::api
