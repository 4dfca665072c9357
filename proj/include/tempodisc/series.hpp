#pragma once

#include <string>
#include <vector>

#include "tempodisc/types.hpp"

namespace tempodisc {

struct CurvePoint {
    double n;
    double value;
};

// Ordered (n, value) samples for discount curves, time averages, and
// contrast plots. Period values must be strictly increasing.
class CurveSeries {
public:
    explicit CurveSeries(std::string label) : label_(std::move(label)) {}

    void append(double n, double value);

    const std::string& label() const { return label_; }
    const std::vector<CurvePoint>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

private:
    std::string label_;
    std::vector<CurvePoint> points_;
};

}  // namespace tempodisc
