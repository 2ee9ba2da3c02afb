#include "omchain/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "omchain/errors.hpp"

namespace omchain
{
namespace
{

double parse_double(const std::string &text, const std::string &where)
{
    double value = 0.0;
    const char *begin = text.data();
    const char *end = begin + text.size();
    const auto result = std::from_chars(begin, end, value);
    if (result.ec != std::errc{} || result.ptr != end)
    {
        throw ConfigError("malformed number '" + text + "' in " + where);
    }
    return value;
}

std::vector<std::string> split_csv_line(const std::string &line)
{
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true)
    {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos)
        {
            cells.push_back(line.substr(start));
            return cells;
        }
        cells.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

// Reads a line and strips a trailing '\r' so CRLF input parses too.
bool next_line(std::istream &in, std::string &line)
{
    if (!std::getline(in, line))
    {
        return false;
    }
    if (!line.empty() && line.back() == '\r')
    {
        line.pop_back();
    }
    return true;
}

} // namespace

std::string format_double(double value)
{
    if (std::isnan(value))
    {
        return "nan";
    }
    if (std::isinf(value))
    {
        return value > 0.0 ? "inf" : "-inf";
    }
    std::array<char, 40> buffer{};
    const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    return std::string(buffer.data(), result.ptr);
}

void write_csv(const SweepTable &table, std::ostream &out)
{
    for (std::size_t col = 0; col < table.columns.size(); ++col)
    {
        if (col > 0)
        {
            out << ',';
        }
        out << table.columns[col];
    }
    out << '\n';
    for (const std::vector<std::optional<double>> &row : table.rows)
    {
        if (row.size() != table.columns.size())
        {
            throw ConfigError("table row width does not match the header");
        }
        for (std::size_t col = 0; col < row.size(); ++col)
        {
            if (col > 0)
            {
                out << ',';
            }
            if (row[col])
            {
                out << format_double(*row[col]);
            }
        }
        out << '\n';
    }
}

void write_json(const SweepTable &table, std::ostream &out)
{
    // Handwritten so numbers use the same shortest-round-trip form as the CSV
    // writer and keys keep column order. NaN values (which JSON cannot carry)
    // serialize as null, like missing values.
    if (table.rows.empty())
    {
        out << "[]\n";
        return;
    }
    out << "[\n";
    for (std::size_t r = 0; r < table.rows.size(); ++r)
    {
        const std::vector<std::optional<double>> &row = table.rows[r];
        if (row.size() != table.columns.size())
        {
            throw ConfigError("table row width does not match the header");
        }
        out << "  {\n";
        for (std::size_t col = 0; col < row.size(); ++col)
        {
            out << "    " << nlohmann::json(table.columns[col]).dump() << ": ";
            if (row[col] && !std::isnan(*row[col]))
            {
                out << format_double(*row[col]);
            }
            else
            {
                out << "null";
            }
            out << (col + 1 < row.size() ? ",\n" : "\n");
        }
        out << (r + 1 < table.rows.size() ? "  },\n" : "  }\n");
    }
    out << "]\n";
}

SweepTable spectrum_table(const std::vector<SpectrumRow> &rows)
{
    SweepTable table;
    table.columns = {"center_hz", "xa_xa", "xa_pa", "xa_xc", "xa_pc", "pa_pa",
                     "pa_xc",     "pa_pc", "xc_xc", "xc_pc", "pc_pc"};
    table.rows.reserve(rows.size());
    for (const SpectrumRow &row : rows)
    {
        std::vector<std::optional<double>> cells;
        cells.reserve(table.columns.size());
        cells.emplace_back(row.center_hz);
        for (double entry : row.entries)
        {
            cells.emplace_back(entry);
        }
        table.rows.push_back(std::move(cells));
    }
    return table;
}

SweepTable read_csv(std::istream &in)
{
    std::string line;
    if (!next_line(in, line))
    {
        throw ConfigError("CSV input is empty (no header row)");
    }
    SweepTable table;
    table.columns = split_csv_line(line);
    if (table.columns.size() == 1 && table.columns[0].empty())
    {
        throw ConfigError("CSV header row is empty");
    }
    std::size_t line_number = 1;
    while (next_line(in, line))
    {
        ++line_number;
        if (line.empty() && in.eof())
        {
            break;
        }
        const std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != table.columns.size())
        {
            throw ConfigError("CSV line " + std::to_string(line_number) + " has " +
                              std::to_string(cells.size()) + " cells, expected " +
                              std::to_string(table.columns.size()));
        }
        std::vector<std::optional<double>> row(cells.size());
        for (std::size_t col = 0; col < cells.size(); ++col)
        {
            if (!cells[col].empty())
            {
                row[col] = parse_double(cells[col],
                                        "CSV line " + std::to_string(line_number));
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

SweepTable read_json(std::istream &in)
{
    nlohmann::ordered_json doc;
    try
    {
        doc = nlohmann::ordered_json::parse(in);
    }
    catch (const nlohmann::json::exception &error)
    {
        throw ConfigError(std::string("malformed JSON table: ") + error.what());
    }
    if (!doc.is_array())
    {
        throw ConfigError("JSON table must be an array of records");
    }
    SweepTable table;
    for (std::size_t r = 0; r < doc.size(); ++r)
    {
        const nlohmann::ordered_json &record = doc[r];
        if (!record.is_object())
        {
            throw ConfigError("JSON table record " + std::to_string(r) +
                              " is not an object");
        }
        if (r == 0)
        {
            for (const auto &item : record.items())
            {
                table.columns.push_back(item.key());
            }
        }
        std::vector<std::optional<double>> row;
        row.reserve(table.columns.size());
        std::size_t col = 0;
        for (const auto &item : record.items())
        {
            if (col >= table.columns.size() || item.key() != table.columns[col])
            {
                throw ConfigError("JSON table record " + std::to_string(r) +
                                  " does not match the first record's columns");
            }
            if (item.value().is_null())
            {
                row.emplace_back(std::nullopt);
            }
            else if (item.value().is_number())
            {
                row.emplace_back(item.value().get<double>());
            }
            else
            {
                throw ConfigError("JSON table record " + std::to_string(r) + " key '" +
                                  item.key() + "' is neither a number nor null");
            }
            ++col;
        }
        if (col != table.columns.size())
        {
            throw ConfigError("JSON table record " + std::to_string(r) +
                              " does not match the first record's columns");
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace omchain
