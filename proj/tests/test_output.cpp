#include <catch2/catch_amalgamated.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gravnoise/output.hpp"

using namespace gravnoise;

TEST_CASE("17-significant-digit formatting round-trips doubles") {
    for (double v : {1.0, -2.5, 0.1, 3.141592653589793, 1e-300, -7.00001e250, 0.0}) {
        const std::string text = format_double_17(v);
        double back = 0.0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), back);
        REQUIRE(ec == std::errc{});
        CHECK(ptr == text.data() + text.size());
        CHECK(back == v);
        CHECK(text.find('e') != std::string::npos);  // scientific notation
    }
    CHECK(format_double_17(1.0) == "1.0000000000000000e+00");
    CHECK(format_double_17(-0.5) == "-5.0000000000000000e-01");
}

TEST_CASE("Spectrum CSV layout") {
    DeviationSpectrum s;
    s.omega = {1.0, 2.0};
    s.c33 = {0.5, 0.25};
    s.c13 = {0.375, 0.1875};
    s.c23 = s.c13;
    s.c12 = {0.125, 0.0625};
    s.c12p = s.c12;
    s.trace = {0.0, 0.0};

    std::ostringstream os;
    write_spectrum_csv(os, s);
    std::istringstream is(os.str());
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line == "omega,C_d33,C_d13,C_d23,C_d12,C_d12p,C_trace");
    REQUIRE(std::getline(is, line));
    CHECK(line ==
          "1.0000000000000000e+00,5.0000000000000000e-01,3.7500000000000000e-01,"
          "3.7500000000000000e-01,1.2500000000000000e-01,1.2500000000000000e-01,"
          "0.0000000000000000e+00");
    REQUIRE(std::getline(is, line));
    CHECK_FALSE(std::getline(is, line));  // exactly one row per grid point
}

TEST_CASE("Spectrum JSON carries metadata and rows") {
    DeviationSpectrum s;
    s.omega = {1.0};
    s.c33 = {0.5};
    s.c13 = {0.375};
    s.c23 = {0.375};
    s.c12 = {0.125};
    s.c12p = {0.125};
    s.trace = {0.0625};

    RunConfig config = default_config();
    config.seed = 7;
    const nlohmann::json doc = spectrum_json(s, config);

    CHECK(doc["metadata"]["generator"] == "gravnoise");
    CHECK(doc["metadata"]["seed"] == 7);
    CHECK(doc["metadata"]["channels"] == "both");
    // The embedded canonical config reproduces the run exactly.
    const RunConfig back = parse_config(doc["metadata"]["config"].get<std::string>());
    CHECK(back.seed == 7);

    REQUIRE(doc["columns"].size() == 7);
    CHECK(doc["columns"][0] == "omega");
    CHECK(doc["columns"][6] == "C_trace");
    REQUIRE(doc["rows"].size() == 1);
    CHECK(doc["rows"][0][1].get<double>() == 0.5);
    CHECK(doc["rows"][0][6].get<double>() == 0.0625);
}

TEST_CASE("Coefficient table lists species rows plus an aggregate") {
    const FieldContent content{{{SpeciesKind::Maxwell, 0.0, 1}, {SpeciesKind::Neutrino, 0.0, 3}},
                               Dimension(4)};
    const std::vector<CoefficientRow> rows = coefficient_table(content);
    REQUIRE(rows.size() == 3);

    CHECK(rows[0].species == "maxwell");
    CHECK(rows[0].zeta0_exact == "1/(80*pi^2)");
    CHECK(rows[0].zeta1_exact == "0");
    CHECK(rows[1].species == "neutrino");
    CHECK(rows[1].multiplicity == 3);
    CHECK(rows[1].zeta0 == Catch::Approx(rows[0].zeta0 / 4.0).epsilon(1e-15));

    CHECK(rows[2].species == "total");
    CHECK(rows[2].zeta0_exact == "7/(320*pi^2)");  // (1 + 3/4) / (80 pi^2)
    CHECK(rows[2].zeta0 == Catch::Approx(rows[0].zeta0 * 1.75).epsilon(1e-14));
    CHECK(rows[2].note.empty());

    // Massive species are flagged with their threshold note.
    const FieldContent massive{{{SpeciesKind::Scalar, 0.5, 1}}, Dimension(4)};
    const std::vector<CoefficientRow> mrows = coefficient_table(massive);
    REQUIRE(mrows.size() == 2);
    CHECK(mrows[0].note.find("massive") != std::string::npos);
    CHECK(mrows[1].note == "total over massless limits");

    // The two-dimensional scalar row records its anomaly.
    const FieldContent d2{{{SpeciesKind::Scalar, 0.0, 1}}, Dimension(2)};
    CHECK(coefficient_table(d2)[0].note.find("anomaly") != std::string::npos);
}

TEST_CASE("Coefficient CSV and JSON") {
    const FieldContent content{{{SpeciesKind::Scalar, 0.0, 1}}, Dimension(4)};
    const std::vector<CoefficientRow> rows = coefficient_table(content);

    std::ostringstream os;
    write_coefficients_csv(os, rows);
    std::istringstream is(os.str());
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line == "species,multiplicity,mass,zeta0_exact,zeta0,zeta1_exact,zeta1,note");
    REQUIRE(std::getline(is, line));
    CHECK(line.rfind("scalar,1,,1/(960*pi^2),", 0) == 0);
    REQUIRE(std::getline(is, line));
    CHECK(line.rfind("total,,,1/(960*pi^2),", 0) == 0);

    const nlohmann::json doc = coefficients_json(rows, default_config());
    REQUIRE(doc["rows"].size() == 2);
    CHECK(doc["rows"][0]["species"] == "scalar");
    CHECK(doc["rows"][0]["zeta1_exact"] == "1/(96*pi^2)");
    CHECK_FALSE(doc["rows"][0].contains("mass"));
    CHECK_FALSE(doc["rows"][1].contains("multiplicity"));
}

TEST_CASE("Text files are written atomically enough to read back") {
    const std::filesystem::path path =
        std::filesystem::temp_directory_path() / "gravnoise_output_test.txt";
    const std::string payload = "line one\nline two\n";
    write_text_file(path.string(), payload);
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str() == payload);
    std::filesystem::remove(path);

    CHECK_THROWS_AS(write_text_file("/nonexistent-dir/sub/file.txt", "x"), IoError);
}
