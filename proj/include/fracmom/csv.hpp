#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "fracmom/moments.hpp"
#include "fracmom/reconstruct.hpp"

namespace fracmom::io {

using Metadata = std::vector<std::pair<std::string, std::string>>;

// shortest decimal that parses back to the same double
std::string format_double(double v);
double parse_double(const std::string& text);  // ArgumentError on garbage

std::string sign_name(Sign s);
Sign parse_sign(const std::string& text);

void write_grid_csv(std::ostream& os, const MomentGrid& grid, const Metadata& meta);

struct GridFile {
    MomentGrid grid;
    Metadata meta;

    const std::string* find(const std::string& key) const;
};

GridFile read_grid_csv(std::istream& is);

void write_curve_csv(std::ostream& os, const CurveResult& curve, const Metadata& meta);

// write to a sibling temporary file, then rename over the target
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace fracmom::io
