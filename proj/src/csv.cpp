#include "fracmom/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "fracmom/errors.hpp"

namespace fracmom::io {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream ss(line);
    while (std::getline(ss, cur, sep)) out.push_back(cur);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

std::string trim(std::string s) {
    auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (!s.empty() && ws(s.back())) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && ws(s[i])) ++i;
    return s.substr(i);
}

void write_meta(std::ostream& os, const Metadata& meta) {
    for (const auto& [k, v] : meta) os << "# " << k << '=' << v << '\n';
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
    std::string t = trim(text);
    double v = 0.0;
    auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (res.ec != std::errc() || res.ptr != t.data() + t.size() || t.empty())
        throw ArgumentError("not a number: '" + text + "'");
    return v;
}

std::string sign_name(Sign s) { return s == Sign::plus ? "plus" : "minus"; }

Sign parse_sign(const std::string& text) {
    if (text == "plus") return Sign::plus;
    if (text == "minus") return Sign::minus;
    throw ArgumentError("sign must be 'plus' or 'minus', got '" + text + "'");
}

void write_grid_csv(std::ostream& os, const MomentGrid& grid, const Metadata& meta) {
    write_meta(os, meta);
    os << "# rho=" << format_double(grid.params.rho) << '\n';
    os << "# delta=" << format_double(grid.params.delta) << '\n';
    os << "# sign=" << sign_name(grid.params.sign) << '\n';
    os << "k,rho,eta,re,im\n";
    for (int k = -grid.params.m; k <= grid.params.m; ++k) {
        Complex g = grid.gamma(k);
        const Complex& v = grid.at(k);
        os << k << ',' << format_double(g.real()) << ',' << format_double(g.imag()) << ','
           << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
    }
}

const std::string* GridFile::find(const std::string& key) const {
    for (const auto& [k, v] : meta)
        if (k == key) return &v;
    return nullptr;
}

GridFile read_grid_csv(std::istream& is) {
    GridFile file;
    std::string line;
    bool header = false;
    std::vector<int> ks;
    std::vector<Complex> values;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::string body = trim(line.substr(1));
            auto eq = body.find('=');
            if (eq != std::string::npos) file.meta.emplace_back(trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
            continue;
        }
        if (!header) {
            if (line != "k,rho,eta,re,im")
                throw ArgumentError("moment grid: expected header 'k,rho,eta,re,im' at line " + std::to_string(lineno));
            header = true;
            continue;
        }
        auto cols = split(line, ',');
        if (cols.size() != 5) throw ArgumentError("moment grid: line " + std::to_string(lineno) + " needs 5 columns");
        double k = parse_double(cols[0]);
        if (k != std::floor(k)) throw ArgumentError("moment grid: non-integer k at line " + std::to_string(lineno));
        ks.push_back(static_cast<int>(k));
        values.emplace_back(parse_double(cols[3]), parse_double(cols[4]));
    }
    if (!header || values.empty()) throw ArgumentError("moment grid: no data rows");
    int m = static_cast<int>(values.size() / 2);
    if (values.size() != std::size_t(2 * m + 1)) throw ArgumentError("moment grid: row count must be odd (2m+1)");
    for (std::size_t i = 0; i < ks.size(); ++i)
        if (ks[i] != int(i) - m) throw ArgumentError("moment grid: k must run from -m to m in order");
    const std::string* rho = file.find("rho");
    const std::string* delta = file.find("delta");
    const std::string* sign = file.find("sign");
    if (!rho || !delta || !sign) throw ArgumentError("moment grid: metadata must record rho, delta and sign");
    file.grid.params = {parse_double(*rho), parse_double(*delta), m, parse_sign(*sign)};
    file.grid.params.validate();
    file.grid.values = std::move(values);
    // the grid parameters are carried by dedicated fields from here on
    std::erase_if(file.meta, [](const auto& kv) { return kv.first == "rho" || kv.first == "delta" || kv.first == "sign"; });
    return file;
}

void write_curve_csv(std::ostream& os, const CurveResult& curve, const Metadata& meta) {
    write_meta(os, meta);
    os << "# kind=" << (curve.kind == CurveKind::cf ? "cf" : "pdf") << '\n';
    os << "# rho=" << format_double(curve.params.rho) << '\n';
    os << "# delta=" << format_double(curve.params.delta) << '\n';
    os << "# m=" << curve.params.m << '\n';
    os << "# sign=" << sign_name(curve.params.sign) << '\n';
    if (curve.kind == CurveKind::pdf)
        os << "# max_imag_residual=" << format_double(curve.max_imag_residual) << '\n';
    os << "x,re,im,exact_re,exact_im,abs_err\n";
    for (std::size_t i = 0; i < curve.abscissae.size(); ++i) {
        os << format_double(curve.abscissae[i]) << ',' << format_double(curve.values[i].real()) << ','
           << format_double(curve.values[i].imag()) << ',';
        if (curve.exact) {
            const Complex& e = (*curve.exact)[i];
            os << format_double(e.real()) << ',' << format_double(e.imag()) << ','
               << format_double((*curve.abs_err)[i]);
        } else {
            os << ",,";
        }
        os << '\n';
    }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
    std::random_device rd;
    fs::path tmp = dir / ("." + path.filename().string() + ".tmp" + std::to_string(rd()));
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw ArgumentError("cannot write to " + tmp.string());
        os << content;
        os.flush();
        if (!os) throw ArgumentError("failed writing " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp);
        throw ArgumentError("cannot move output into place at " + path.string() + ": " + ec.message());
    }
}

}  // namespace fracmom::io
