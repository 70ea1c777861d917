#pragma once

#include <optional>
#include <string>

#include "qmock/qseries.hpp"

namespace qmock {

/* Machine-readable verdict for one exact catalog identity: pass/fail plus
 * the smallest exponent where the sides disagree and both coefficients. */
struct IdentityReport {
    std::string id;
    Rat order;
    bool pass = false;
    std::optional<QSeries::Mismatch> first_mismatch;
    std::string note; // optional context, e.g. which route pair disagreed

    static IdentityReport from_compare(const std::string& id, const Rat& order,
                                       const QSeries& lhs, const QSeries& rhs) {
        IdentityReport r;
        r.id = id;
        r.order = order;
        auto mm = QSeries::first_mismatch(lhs, rhs, order);
        r.pass = !mm.has_value();
        r.first_mismatch = mm;
        return r;
    }
};

} // namespace qmock
