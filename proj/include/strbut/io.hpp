#pragma once

// CSV serialization for regions and strings.
//
// Region files: header `x0,x1,...`, one point per row in lexicographic cell
// order. String files: header `t,x0,x1,...`, rows in vertex order. Numbers use
// the shortest representation that round-trips a double exactly.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "strbut/geometry.hpp"

namespace strbut {

std::string format_double(double value);
double parse_double(std::string_view text);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    std::vector<std::size_t> line_numbers; // 1-based source line of each row

    /// Index of a named column; throws if absent.
    std::size_t column(std::string_view name) const;
};

CsvTable read_csv(std::istream& in, const std::string& source = "<stream>");
CsvTable read_csv_file(const std::filesystem::path& path);

void write_region_csv(std::ostream& out, const Region& region);
void write_string_csv(std::ostream& out, const StringPath& path);

Region region_from_table(const CsvTable& table, double resolution);
StringPath string_from_table(const CsvTable& table);

Region read_region_csv(const std::filesystem::path& path, double resolution);
StringPath read_string_csv(const std::filesystem::path& path);

} // namespace strbut
