#pragma once

#include <array>
#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ptspec/boundary.hpp"
#include "ptspec/spectrum.hpp"

namespace ptspec {

/// Fixed 17-significant-digit decimal, the shortest width that always
/// round-trips a double; emitted CSV is byte-stable under parse/re-emit.
std::string format_g17(double v);

struct SpectrumRecord {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    SpectralClass spectral_class = SpectralClass::RealSimple;
    std::vector<std::complex<double>> roots;  // ascending by (re, im)
    int jordan_defect = 0;
};

struct MetricRecord {
    double a = 0.0;
    double gamma = 0.0;
    std::array<double, 4> theta{};  // row-major 2x2
    double det = 0.0;
    double min_eigenvalue = 0.0;
    double residual = 0.0;
};

struct LemmaRecord {
    double b = 0.0;
    double eta = 0.0;
    double eta_over_b2 = 0.0;
};

// CSV: header row, comma-separated, LF line endings, %.17g numbers.
void write_spectrum_csv(std::ostream& os, const std::vector<SpectrumRecord>& records,
                        int dimension);
void write_boundary_csv(std::ostream& os, const std::vector<BoundaryCurve>& curves);
void write_dep_csv(std::ostream& os, const std::vector<DepPoint>& points);
void write_metric_csv(std::ostream& os, const std::vector<MetricRecord>& records);
void write_lemma_csv(std::ostream& os, const std::vector<LemmaRecord>& records);

// JSON record arrays; the CLI wraps them as {"config": ..., "records": ...}.
nlohmann::json spectrum_records_json(const std::vector<SpectrumRecord>& records);
nlohmann::json boundary_records_json(const std::vector<BoundaryCurve>& curves);
nlohmann::json dep_records_json(const std::vector<DepPoint>& points);
nlohmann::json metric_records_json(const std::vector<MetricRecord>& records);
nlohmann::json lemma_records_json(const std::vector<LemmaRecord>& records);

void write_json_document(std::ostream& os, const nlohmann::json& config,
                         const nlohmann::json& records);

/// SVG 1.1, square viewport spanning [-2.2, 2.2]^2, axes with unit ticks,
/// one polyline per arc. Intentionally minimal so any viewer renders it.
void write_boundary_svg(std::ostream& os, const std::vector<BoundaryCurve>& curves);

}  // namespace ptspec
