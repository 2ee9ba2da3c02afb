#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "omchain/dynamics.hpp"
#include "omchain/io.hpp"
#include "omchain/scattering.hpp"

using namespace omchain;

namespace
{

SweepTable sample_table()
{
    SweepTable table;
    table.columns = {"alpha", "log_negativity", "fidelity"};
    table.rows = {
        {14.0, 0.5249791874789398, 0.1},
        {42.0, std::nullopt, std::nullopt},
        {60.0, 1e10, -2.8517169273019665},
    };
    return table;
}

std::string csv_text(const SweepTable &table)
{
    std::ostringstream out;
    write_csv(table, out);
    return out.str();
}

std::string json_text(const SweepTable &table)
{
    std::ostringstream out;
    write_json(table, out);
    return out.str();
}

bool cells_equal(const std::optional<double> &a, const std::optional<double> &b)
{
    if (a.has_value() != b.has_value())
    {
        return false;
    }
    if (!a)
    {
        return true;
    }
    if (std::isnan(*a) || std::isnan(*b))
    {
        return std::isnan(*a) && std::isnan(*b);
    }
    return *a == *b && std::signbit(*a) == std::signbit(*b);
}

bool tables_equal(const SweepTable &a, const SweepTable &b)
{
    if (a.columns != b.columns || a.rows.size() != b.rows.size())
    {
        return false;
    }
    for (std::size_t r = 0; r < a.rows.size(); ++r)
    {
        if (a.rows[r].size() != b.rows[r].size())
        {
            return false;
        }
        for (std::size_t c = 0; c < a.rows[r].size(); ++c)
        {
            if (!cells_equal(a.rows[r][c], b.rows[r][c]))
            {
                return false;
            }
        }
    }
    return true;
}

} // namespace

TEST_SUITE("io")
{

TEST_CASE("format_double emits the shortest exact representation")
{
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1e10) == "1e+10");
    CHECK(format_double(-0.0) == "-0");
    CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");

    for (const double value : {2.8517169273019665, 1.0 / 3.0, M_PI, 5e-324,
                               -1.7976931348623157e308, 42.0, 9.75e9})
    {
        const std::string text = format_double(value);
        CHECK(std::stod(text) == value);
        // Re-formatting the parsed value reproduces the same bytes.
        CHECK(format_double(std::stod(text)) == text);
    }
}

TEST_CASE("CSV writes and reads back the identical table")
{
    const SweepTable table = sample_table();
    const std::string text = csv_text(table);
    CHECK(text == "alpha,log_negativity,fidelity\n"
                  "14,0.5249791874789398,0.1\n"
                  "42,,\n"
                  "60,1e+10,-2.8517169273019665\n");

    std::istringstream in(text);
    const SweepTable parsed = read_csv(in);
    CHECK(tables_equal(parsed, table));

    // Re-emission is byte-identical.
    CHECK(csv_text(parsed) == text);
}

TEST_CASE("CSV carries non-finite values")
{
    SweepTable table;
    table.columns = {"x"};
    table.rows = {{std::numeric_limits<double>::quiet_NaN()},
                  {std::numeric_limits<double>::infinity()},
                  {-std::numeric_limits<double>::infinity()}};

    std::istringstream in(csv_text(table));
    const SweepTable parsed = read_csv(in);
    REQUIRE(parsed.rows.size() == 3);
    CHECK(std::isnan(*parsed.rows[0][0]));
    CHECK(*parsed.rows[1][0] == std::numeric_limits<double>::infinity());
    CHECK(*parsed.rows[2][0] == -std::numeric_limits<double>::infinity());
}

TEST_CASE("CSV accepts CRLF line endings")
{
    std::string text = csv_text(sample_table());
    std::string crlf;
    for (const char ch : text)
    {
        if (ch == '\n')
        {
            crlf += "\r\n";
        }
        else
        {
            crlf += ch;
        }
    }

    std::istringstream in(crlf);
    CHECK(tables_equal(read_csv(in), sample_table()));
}

TEST_CASE("CSV rejects malformed input")
{
    std::istringstream empty("");
    CHECK_THROWS_WITH_AS(read_csv(empty), doctest::Contains("empty"), ConfigError);

    std::istringstream blank_header("\n1,2\n");
    CHECK_THROWS_WITH_AS(read_csv(blank_header), doctest::Contains("header"), ConfigError);

    std::istringstream ragged("a,b,c\n1,2\n");
    CHECK_THROWS_WITH_AS(read_csv(ragged),
                         doctest::Contains("has 2 cells, expected 3"), ConfigError);

    std::istringstream garbage("a,b\n1,two\n");
    CHECK_THROWS_WITH_AS(read_csv(garbage),
                         doctest::Contains("malformed number 'two'"), ConfigError);
}

TEST_CASE("JSON writes records in column order and reads them back")
{
    SweepTable table = sample_table();
    // JSON cannot carry NaN; keep this fixture finite.
    const std::string text = json_text(table);
    CHECK(text == "[\n"
                  "  {\n"
                  "    \"alpha\": 14,\n"
                  "    \"log_negativity\": 0.5249791874789398,\n"
                  "    \"fidelity\": 0.1\n"
                  "  },\n"
                  "  {\n"
                  "    \"alpha\": 42,\n"
                  "    \"log_negativity\": null,\n"
                  "    \"fidelity\": null\n"
                  "  },\n"
                  "  {\n"
                  "    \"alpha\": 60,\n"
                  "    \"log_negativity\": 1e+10,\n"
                  "    \"fidelity\": -2.8517169273019665\n"
                  "  }\n"
                  "]\n");

    std::istringstream in(text);
    const SweepTable parsed = read_json(in);
    CHECK(tables_equal(parsed, table));
    CHECK(json_text(parsed) == text);
}

TEST_CASE("JSON serializes NaN as null")
{
    SweepTable table;
    table.columns = {"x"};
    table.rows = {{std::numeric_limits<double>::quiet_NaN()}};

    std::istringstream in(json_text(table));
    const SweepTable parsed = read_json(in);
    REQUIRE(parsed.rows.size() == 1);
    CHECK_FALSE(parsed.rows[0][0].has_value());
}

TEST_CASE("JSON rejects malformed input")
{
    std::istringstream truncated("[{");
    CHECK_THROWS_WITH_AS(read_json(truncated),
                         doctest::Contains("malformed JSON table"), ConfigError);

    std::istringstream scalar("42");
    CHECK_THROWS_WITH_AS(read_json(scalar),
                         doctest::Contains("must be an array"), ConfigError);

    std::istringstream non_record("[42]");
    CHECK_THROWS_WITH_AS(read_json(non_record),
                         doctest::Contains("is not an object"), ConfigError);

    std::istringstream mismatched(R"([{"a": 1}, {"b": 2}])");
    CHECK_THROWS_WITH_AS(read_json(mismatched),
                         doctest::Contains("does not match"), ConfigError);

    std::istringstream stringy(R"([{"a": "x"}])");
    CHECK_THROWS_WITH_AS(read_json(stringy),
                         doctest::Contains("neither a number nor null"), ConfigError);
}

TEST_CASE("CSV and JSON agree cell for cell")
{
    const SweepTable table = sample_table();
    std::istringstream csv_in(csv_text(table));
    std::istringstream json_in(json_text(table));
    CHECK(tables_equal(read_csv(csv_in), read_json(json_in)));
}

TEST_CASE("empty tables serialize to a bare header and an empty array")
{
    SweepTable table;
    table.columns = {"a", "b"};
    CHECK(csv_text(table) == "a,b\n");
    CHECK(json_text(table) == "[]\n");

    std::istringstream in("[]");
    const SweepTable parsed = read_json(in);
    CHECK(parsed.columns.empty());
    CHECK(parsed.rows.empty());
}

TEST_CASE("writers refuse rows that do not match the header")
{
    SweepTable table;
    table.columns = {"a", "b"};
    table.rows = {{1.0}};

    std::ostringstream out;
    CHECK_THROWS_AS(write_csv(table, out), ConfigError);
    CHECK_THROWS_AS(write_json(table, out), ConfigError);
}

TEST_CASE("covariance spectra flatten into a writable table")
{
    const ChainParams p = table1_preset();
    const std::vector<SpectrumRow> rows = covariance_spectrum(
        build_drift(p), NoiseOccupations{}, p.detuning_hz - 1e8, p.detuning_hz + 1e8, 3);

    const SweepTable table = spectrum_table(rows);
    CHECK(table.columns ==
          std::vector<std::string>({"center_hz", "xa_xa", "xa_pa", "xa_xc", "xa_pc",
                                    "pa_pa", "pa_xc", "pa_pc", "xc_xc", "xc_pc",
                                    "pc_pc"}));
    REQUIRE(table.rows.size() == rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
    {
        CHECK(*table.rows[r][0] == rows[r].center_hz);
        for (std::size_t k = 0; k < rows[r].entries.size(); ++k)
        {
            CHECK(*table.rows[r][k + 1] == rows[r].entries[k]);
        }
    }

    // The flattened spectrum survives a CSV round-trip exactly.
    std::istringstream in(csv_text(table));
    CHECK(tables_equal(read_csv(in), table));
}

} // TEST_SUITE("io")
