#pragma once

#include <stdexcept>
#include <string>

#include "cusp/curve.hpp"
#include "cusp/series.hpp"

namespace cusp {

// File-format errors are separated from map-domain errors so callers can map
// them onto distinct exit codes: ParseFailure means the content is wrong,
// IoFailure means the file could not be read or written at all.
struct ParseFailure : std::runtime_error {
    explicit ParseFailure(const std::string& what) : std::runtime_error(what) {}
};
struct IoFailure : std::runtime_error {
    explicit IoFailure(const std::string& what) : std::runtime_error(what) {}
};

// JSON document {"a": real, "n_max": int, "k_max": int, "c": [[row n=1],
// ...]} with rows of length k_max + 1. Doubles are emitted in shortest
// round-trip form, so write/read is exact.
std::string series_to_json(const LogSeries& s);
LogSeries series_from_json(const std::string& text);

std::string admissibility_to_json(const AdmissibilityReport& r);

// CSV with header "x,u,v", one sample per row, shortest round-trip decimals.
std::string curve_to_csv(const CuspCurve& c);
CuspCurve curve_from_csv(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace cusp
