#include "ptspec/emit.hpp"

#include <cstdio>
#include <ostream>

namespace ptspec {
namespace {

const char* method_name(BoundaryMethod m) {
    return m == BoundaryMethod::Parametric ? "parametric" : "bisect";
}

double generating_parameter(const BoundaryPoint& pt) {
    if (pt.beta) return *pt.beta;
    if (pt.theta) return *pt.theta;
    return 0.0;
}

std::string format_compact(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

std::string format_g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_spectrum_csv(std::ostream& os, const std::vector<SpectrumRecord>& records,
                        int dimension) {
    os << "a,b,c,class";
    for (int k = 1; k <= dimension; ++k)
        os << ",e" << k << "_re,e" << k << "_im";
    os << ",jordan_defect\n";
    for (const auto& r : records) {
        os << format_g17(r.a) << ',' << format_g17(r.b) << ',' << format_g17(r.c) << ','
           << to_string(r.spectral_class);
        for (const auto& root : r.roots)
            os << ',' << format_g17(root.real()) << ',' << format_g17(root.imag());
        os << ',' << r.jordan_defect << '\n';
    }
}

void write_boundary_csv(std::ostream& os, const std::vector<BoundaryCurve>& curves) {
    os << "method,beta_or_theta,a,b,z,y\n";
    for (const auto& curve : curves)
        for (const auto& pt : curve.points)
            os << method_name(curve.method) << ',' << format_g17(generating_parameter(pt))
               << ',' << format_g17(pt.a) << ',' << format_g17(pt.b) << ','
               << format_g17(pt.double_root_z) << ',' << format_g17(pt.single_root_y)
               << '\n';
}

void write_dep_csv(std::ostream& os, const std::vector<DepPoint>& points) {
    os << "a,b,c,z\n";
    for (const auto& p : points)
        os << format_g17(p.a) << ',' << format_g17(p.b) << ',' << format_g17(p.c) << ','
           << format_g17(p.z) << '\n';
}

void write_metric_csv(std::ostream& os, const std::vector<MetricRecord>& records) {
    os << "a,gamma,theta00,theta01,theta10,theta11,det,min_eigenvalue,residual\n";
    for (const auto& r : records) {
        os << format_g17(r.a) << ',' << format_g17(r.gamma);
        for (double t : r.theta) os << ',' << format_g17(t);
        os << ',' << format_g17(r.det) << ',' << format_g17(r.min_eigenvalue) << ','
           << format_g17(r.residual) << '\n';
    }
}

void write_lemma_csv(std::ostream& os, const std::vector<LemmaRecord>& records) {
    os << "b,eta,eta_over_b2\n";
    for (const auto& r : records)
        os << format_g17(r.b) << ',' << format_g17(r.eta) << ','
           << format_g17(r.eta_over_b2) << '\n';
}

nlohmann::json spectrum_records_json(const std::vector<SpectrumRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json roots = nlohmann::json::array();
        for (const auto& root : r.roots)
            roots.push_back({{"re", root.real()}, {"im", root.imag()}});
        arr.push_back({{"a", r.a},
                       {"b", r.b},
                       {"c", r.c},
                       {"class", to_string(r.spectral_class)},
                       {"roots", std::move(roots)},
                       {"jordan_defect", r.jordan_defect}});
    }
    return arr;
}

nlohmann::json boundary_records_json(const std::vector<BoundaryCurve>& curves) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& curve : curves)
        for (const auto& pt : curve.points)
            arr.push_back({{"method", method_name(curve.method)},
                           {"beta_or_theta", generating_parameter(pt)},
                           {"a", pt.a},
                           {"b", pt.b},
                           {"z", pt.double_root_z},
                           {"y", pt.single_root_y}});
    return arr;
}

nlohmann::json dep_records_json(const std::vector<DepPoint>& points) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : points)
        arr.push_back({{"a", p.a}, {"b", p.b}, {"c", p.c}, {"z", p.z}});
    return arr;
}

nlohmann::json metric_records_json(const std::vector<MetricRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records)
        arr.push_back({{"a", r.a},
                       {"gamma", r.gamma},
                       {"theta", {r.theta[0], r.theta[1], r.theta[2], r.theta[3]}},
                       {"det", r.det},
                       {"min_eigenvalue", r.min_eigenvalue},
                       {"residual", r.residual}});
    return arr;
}

nlohmann::json lemma_records_json(const std::vector<LemmaRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records)
        arr.push_back({{"b", r.b}, {"eta", r.eta}, {"eta_over_b2", r.eta_over_b2}});
    return arr;
}

void write_json_document(std::ostream& os, const nlohmann::json& config,
                         const nlohmann::json& records) {
    nlohmann::json doc;
    doc["config"] = config;
    doc["records"] = records;
    os << doc.dump(2) << '\n';
}

void write_boundary_svg(std::ostream& os, const std::vector<BoundaryCurve>& curves) {
    constexpr double kSpan = 2.2;
    constexpr double kSize = 640.0;
    const auto px = [](double v) { return (v + kSpan) / (2.0 * kSpan) * kSize; };
    const auto py = [](double v) { return (kSpan - v) / (2.0 * kSpan) * kSize; };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize
       << "\" height=\"" << kSize << "\" viewBox=\"0 0 " << kSize << ' ' << kSize
       << "\">\n";
    os << "  <rect width=\"" << kSize << "\" height=\"" << kSize
       << "\" fill=\"white\"/>\n";
    // Axes with unit ticks.
    os << "  <g stroke=\"#999\" stroke-width=\"1\">\n";
    os << "    <line x1=\"0\" y1=\"" << format_compact(py(0)) << "\" x2=\"" << kSize
       << "\" y2=\"" << format_compact(py(0)) << "\"/>\n";
    os << "    <line x1=\"" << format_compact(px(0)) << "\" y1=\"0\" x2=\""
       << format_compact(px(0)) << "\" y2=\"" << kSize << "\"/>\n";
    for (int t = -2; t <= 2; ++t) {
        if (t == 0) continue;
        os << "    <line x1=\"" << format_compact(px(t)) << "\" y1=\""
           << format_compact(py(0) - 4) << "\" x2=\"" << format_compact(px(t))
           << "\" y2=\"" << format_compact(py(0) + 4) << "\"/>\n";
        os << "    <line x1=\"" << format_compact(px(0) - 4) << "\" y1=\""
           << format_compact(py(t)) << "\" x2=\"" << format_compact(px(0) + 4)
           << "\" y2=\"" << format_compact(py(t)) << "\"/>\n";
    }
    os << "  </g>\n";
    os << "  <g font-family=\"sans-serif\" font-size=\"12\" fill=\"#555\">\n";
    for (int t = -2; t <= 2; ++t) {
        if (t == 0) continue;
        os << "    <text x=\"" << format_compact(px(t) - 4) << "\" y=\""
           << format_compact(py(0) + 18) << "\">" << t << "</text>\n";
        os << "    <text x=\"" << format_compact(px(0) + 8) << "\" y=\""
           << format_compact(py(t) + 4) << "\">" << t << "</text>\n";
    }
    os << "    <text x=\"" << format_compact(kSize - 18) << "\" y=\""
       << format_compact(py(0) - 8) << "\">a</text>\n";
    os << "    <text x=\"" << format_compact(px(0) + 8) << "\" y=\"14\">b</text>\n";
    os << "  </g>\n";
    for (const auto& curve : curves) {
        os << "  <polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (const auto& pt : curve.points) {
            if (!first) os << ' ';
            first = false;
            os << format_compact(px(pt.a)) << ',' << format_compact(py(pt.b));
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
}

}  // namespace ptspec
