#include "tempodisc/series.hpp"

namespace tempodisc {

void CurveSeries::append(double n, double value) {
    detail::require_finite(n, "series n");
    detail::require_finite(value, "series value");
    if (!points_.empty() && n <= points_.back().n)
        throw DomainError("series periods must be strictly increasing");
    points_.push_back({n, value});
}

}  // namespace tempodisc
