#include "lowcore/core.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace lowcore {

namespace {

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = line.find(',', start);
        auto field = line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
        while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
        while (!field.empty() && (field.back() == ' ' || field.back() == '\t' || field.back() == '\r'))
            field.remove_suffix(1);
        out.push_back(field);
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

double parse_double(std::string_view s, std::size_t line_no) {
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw std::runtime_error("line " + std::to_string(line_no) + ": bad number '" + std::string(s) + "'");
    return v;
}

}  // namespace

WeightedPointSet parse_points_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    std::size_t dim = 0;
    bool has_w = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto header = split(line);
        has_w = !header.empty() && header.back() == "w";
        dim = header.size() - (has_w ? 1 : 0);
        for (std::size_t i = 0; i < dim; ++i)
            if (header[i] != "x" + std::to_string(i))
                throw std::runtime_error("bad header: expected x0,...,x{d-1}[,w]");
        break;
    }
    if (dim == 0) throw std::runtime_error("missing or empty header");

    WeightedPointSet P(dim);
    std::vector<double> p(dim);
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto fields = split(line);
        if (fields.size() != dim + (has_w ? 1 : 0))
            throw std::runtime_error("line " + std::to_string(line_no) + ": wrong field count");
        for (std::size_t i = 0; i < dim; ++i) p[i] = parse_double(fields[i], line_no);
        double w = has_w ? parse_double(fields[dim], line_no) : 1.0;
        P.add(p, w);
    }
    return P;
}

std::string format_points_csv(const WeightedPointSet& P) {
    std::string out;
    for (std::size_t i = 0; i < P.dim(); ++i) out += "x" + std::to_string(i) + ",";
    out += "w\n";
    char buf[64];
    for (std::size_t i = 0; i < P.size(); ++i) {
        for (double x : P.point(i)) {
            std::snprintf(buf, sizeof buf, "%.17g,", x);
            out += buf;
        }
        std::snprintf(buf, sizeof buf, "%.17g\n", P.weight(i));
        out += buf;
    }
    return out;
}

WeightedPointSet read_points_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_points_csv(ss.str());
}

void write_points_csv(const std::string& path, const WeightedPointSet& P) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << format_points_csv(P);
}

}  // namespace lowcore
