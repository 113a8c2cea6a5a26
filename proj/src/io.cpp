#include "strbut/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace strbut {

std::string format_double(double value) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) throw Error("failed to format number");
    return std::string(buf.data(), end);
}

double parse_double(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw Error("not a number: '" + std::string(text) + "'");
    }
    return value;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

} // namespace

std::size_t CsvTable::column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    throw Error("missing column '" + std::string(name) + "'");
}

CsvTable read_csv(std::istream& in, const std::string& source) {
    CsvTable table;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
        if (trim(line).empty()) continue;
        auto fields = split_fields(line);
        if (!have_header) {
            for (auto& f : fields) table.header.push_back(trim(f));
            have_header = true;
            continue;
        }
        if (fields.size() != table.header.size()) {
            throw Error(source + ":" + std::to_string(line_no) + ": expected " +
                        std::to_string(table.header.size()) + " fields, got " +
                        std::to_string(fields.size()));
        }
        std::vector<double> row;
        row.reserve(fields.size());
        for (const auto& f : fields) {
            try {
                row.push_back(parse_double(f));
            } catch (const Error& e) {
                throw Error(source + ":" + std::to_string(line_no) + ": " + e.what());
            }
        }
        table.rows.push_back(std::move(row));
        table.line_numbers.push_back(line_no);
    }
    if (!have_header) throw Error(source + ": empty CSV (no header)");
    return table;
}

CsvTable read_csv_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    return read_csv(in, path.string());
}

void write_region_csv(std::ostream& out, const Region& region) {
    for (std::size_t i = 0; i < region.dim(); ++i) out << (i ? ",x" : "x") << i;
    out << '\n';
    for (const auto& p : region.points()) {
        for (std::size_t i = 0; i < p.dim(); ++i) out << (i ? "," : "") << format_double(p[i]);
        out << '\n';
    }
}

void write_string_csv(std::ostream& out, const StringPath& path) {
    out << 't';
    for (std::size_t i = 0; i < path.dim(); ++i) out << ",x" << i;
    out << '\n';
    for (std::size_t k = 0; k < path.size(); ++k) {
        out << format_double(path.params()[k]);
        const auto& p = path.vertices()[k];
        for (std::size_t i = 0; i < p.dim(); ++i) out << ',' << format_double(p[i]);
        out << '\n';
    }
}

namespace {

std::vector<std::size_t> coordinate_columns(const CsvTable& table) {
    std::vector<std::size_t> cols;
    for (std::size_t i = 0;; ++i) {
        const std::string name = "x" + std::to_string(i);
        bool found = false;
        for (std::size_t c = 0; c < table.header.size(); ++c) {
            if (table.header[c] == name) {
                cols.push_back(c);
                found = true;
            }
        }
        if (!found) break;
    }
    if (cols.empty()) throw Error("CSV has no coordinate columns x0,x1,...");
    return cols;
}

} // namespace

Region region_from_table(const CsvTable& table, double resolution) {
    const auto cols = coordinate_columns(table);
    std::vector<Point> pts;
    pts.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        std::vector<double> c;
        for (auto col : cols) c.push_back(row[col]);
        pts.emplace_back(std::move(c));
    }
    if (pts.empty()) throw Error("region CSV has no data rows");
    return Region(std::move(pts), resolution);
}

StringPath string_from_table(const CsvTable& table) {
    const auto cols = coordinate_columns(table);
    const auto tcol = table.column("t");
    std::vector<Point> pts;
    std::vector<double> ts;
    for (const auto& row : table.rows) {
        std::vector<double> c;
        for (auto col : cols) c.push_back(row[col]);
        pts.emplace_back(std::move(c));
        ts.push_back(row[tcol]);
    }
    return StringPath(std::move(pts), std::move(ts));
}

Region read_region_csv(const std::filesystem::path& path, double resolution) {
    return region_from_table(read_csv_file(path), resolution);
}

StringPath read_string_csv(const std::filesystem::path& path) {
    return string_from_table(read_csv_file(path));
}

} // namespace strbut
