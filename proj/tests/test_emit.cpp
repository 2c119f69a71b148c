#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "ptspec/boundary.hpp"
#include "ptspec/emit.hpp"

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

std::vector<std::string> split_cells(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    cells.push_back(cur);
    return cells;
}

bool is_numeric(const std::string& cell) {
    if (cell.empty()) return false;
    char* end = nullptr;
    std::strtod(cell.c_str(), &end);
    return end == cell.c_str() + cell.size();
}

}  // namespace

TEST_CASE("seventeen significant digits round-trip") {
    const std::vector<double> samples{1.0 / 3.0,
                                      std::sqrt(2.0),
                                      -0.0,
                                      6.123233995736766e-17,
                                      1e300,
                                      -2.2250738585072014e-308,
                                      1.6677487755718534e-3};
    for (double v : samples) {
        const std::string text = ptspec::format_g17(v);
        char* end = nullptr;
        const double back = std::strtod(text.c_str(), &end);
        CHECK(end == text.c_str() + text.size());
        CHECK(back == v);
    }
}

TEST_CASE("spectrum csv layout") {
    ptspec::SpectrumRecord rec;
    rec.a = 0.5;
    rec.b = 0.0;
    rec.c = 0.0;
    rec.spectral_class = ptspec::SpectralClass::RealSimple;
    rec.roots = {{-0.8, 0.0}, {0.8, 0.0}};
    rec.jordan_defect = 0;
    std::ostringstream os;
    ptspec::write_spectrum_csv(os, {rec}, 2);
    const auto lines = split_lines(os.str());
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "a,b,c,class,e1_re,e1_im,e2_re,e2_im,jordan_defect");
    const auto cells = split_cells(lines[1]);
    REQUIRE(cells.size() == 9);
    CHECK(cells[3] == "RealSimple");
    CHECK(cells[4] == "-0.80000000000000004");
    CHECK(cells[8] == "0");
    CHECK(os.str().find('\r') == std::string::npos);
}

TEST_CASE("boundary csv layout and byte-exact round-trip") {
    const auto curve = ptspec::parametric_arc(1, 1, 25);
    std::ostringstream os;
    ptspec::write_boundary_csv(os, {curve});
    const auto lines = split_lines(os.str());
    REQUIRE(lines.size() == 26);
    CHECK(lines[0] == "method,beta_or_theta,a,b,z,y");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto cells = split_cells(lines[i]);
        REQUIRE(cells.size() == 6);
        CHECK(cells[0] == "parametric");
        for (std::size_t j = 1; j < cells.size(); ++j) {
            REQUIRE(is_numeric(cells[j]));
            const double v = std::strtod(cells[j].c_str(), nullptr);
            CHECK(ptspec::format_g17(v) == cells[j]);
        }
    }
}

TEST_CASE("bisected curves are labeled") {
    const auto curve = ptspec::bisect_curve(8, 0.0, 1e-12);
    std::ostringstream os;
    ptspec::write_boundary_csv(os, {curve});
    const auto lines = split_lines(os.str());
    REQUIRE(lines.size() == 9);
    CHECK(split_cells(lines[1])[0] == "bisect");
}

TEST_CASE("dep csv layout") {
    std::ostringstream os;
    ptspec::write_dep_csv(os, ptspec::dep_points(0.0));
    const auto lines = split_lines(os.str());
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "a,b,c,z");
    CHECK(split_cells(lines[1])[0] == "1.4142135623730951");
    CHECK(split_cells(lines[1])[3] == "1");
}

TEST_CASE("metric and lemma csv layouts") {
    ptspec::MetricRecord mrec;
    mrec.a = 0.5;
    mrec.gamma = 0.0;
    mrec.theta = {1.0, -0.5, -0.5, 1.0};
    mrec.det = 0.75;
    mrec.min_eigenvalue = 0.5;
    mrec.residual = 0.0;
    std::ostringstream mos;
    ptspec::write_metric_csv(mos, {mrec});
    auto lines = split_lines(mos.str());
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] ==
          "a,gamma,theta00,theta01,theta10,theta11,det,min_eigenvalue,residual");
    CHECK(split_cells(lines[1])[6] == "0.75");

    ptspec::LemmaRecord lrec;
    lrec.b = 0.1;
    lrec.eta = 1.6677487755718534e-3;
    lrec.eta_over_b2 = lrec.eta / 0.01;
    std::ostringstream los;
    ptspec::write_lemma_csv(los, {lrec});
    lines = split_lines(los.str());
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "b,eta,eta_over_b2");
    CHECK(split_cells(lines[1])[1] == "0.0016677487755718534");
}

TEST_CASE("json documents carry config and records") {
    const auto curve = ptspec::bisect_curve(8, 0.0, 1e-12);
    const nlohmann::json records = ptspec::boundary_records_json({curve});
    REQUIRE(records.is_array());
    CHECK(records.size() == 8);
    CHECK(records[0].contains("method"));
    CHECK(records[0].contains("beta_or_theta"));
    CHECK(records[0].contains("a"));
    CHECK(records[0].contains("z"));

    nlohmann::json config;
    config["subcommand"] = "boundary";
    config["resolution"] = 8;
    std::ostringstream os;
    ptspec::write_json_document(os, config, records);
    const std::string text = os.str();
    CHECK(text.back() == '\n');
    const auto doc = nlohmann::json::parse(text);
    CHECK(doc["config"]["subcommand"] == "boundary");
    CHECK(doc["records"].size() == 8);

    std::ostringstream os2;
    ptspec::write_json_document(os2, config, records);
    CHECK(os.str() == os2.str());
}

TEST_CASE("spectrum json mirrors the csv fields") {
    ptspec::SpectrumRecord rec;
    rec.a = 1.5;
    rec.spectral_class = ptspec::SpectralClass::ComplexPair;
    rec.roots = {{0.0, -std::sqrt(1.25)}, {0.0, std::sqrt(1.25)}};
    const auto records = ptspec::spectrum_records_json({rec});
    REQUIRE(records.size() == 1);
    CHECK(records[0]["class"] == "ComplexPair");
    REQUIRE(records[0]["roots"].is_array());
    CHECK(records[0]["roots"].size() == 2);
    CHECK(records[0]["roots"][0].contains("re"));
    CHECK(records[0]["roots"][0].contains("im"));
    CHECK(records[0]["jordan_defect"] == 0);
}

TEST_CASE("svg output is a standalone picture") {
    const auto arcs = {ptspec::parametric_arc(1, 1, 50),
                       ptspec::parametric_arc(-1, 1, 50),
                       ptspec::parametric_arc(-1, -1, 50),
                       ptspec::parametric_arc(1, -1, 50)};
    std::ostringstream os;
    ptspec::write_boundary_svg(os, arcs);
    const std::string svg = os.str();
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
    CHECK(svg.find("version=\"1.1\"") != std::string::npos);
    CHECK(svg.find("width=\"640\"") != std::string::npos);

    std::size_t polylines = 0;
    for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos;
         pos = svg.find("<polyline", pos + 1))
        ++polylines;
    // axes are drawn as lines, each curve as one polyline
    CHECK(polylines == 4);
    CHECK(svg.find("<line") != std::string::npos);
    CHECK(svg.find("<text") != std::string::npos);
    CHECK(svg.find("nan") == std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
}
