#pragma once

#include <ostream>

#include "misinfo/dynamics.hpp"

namespace misinfo::cli {

/// Line chart of lambda against time, one <polyline> per node, with labelled
/// axes. Output depends only on the series.
void write_svg_chart(const TimeSeries& series, std::ostream& out);

}  // namespace misinfo::cli
