#include "fock/pointset_io.hpp"
#include "fock/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace fock {

namespace {

std::vector<std::string> split_csv(const std::string& line)
{
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        const auto b = field.find_first_not_of(" \t\r");
        const auto e = field.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
    }
    return out;
}

double parse_double(const std::string& s, const std::string& name, std::size_t line)
{
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw validation_error(name + ":" + std::to_string(line) +
                               ": cannot parse number '" + s + "'");
    }
}

int parse_int(const std::string& s, const std::string& name, std::size_t line)
{
    try {
        std::size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw validation_error(name + ":" + std::to_string(line) +
                               ": cannot parse integer '" + s + "'");
    }
}

std::string fmt17(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

MultiSet read_pointset_csv(std::istream& in, const std::string& name)
{
    std::vector<cplx> pts;
    std::vector<int> mults;
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_csv(line);
        if (!header_seen) {
            header_seen = true;
            if (!fields.empty() && fields[0] == "re") continue; // header row
        }
        if (fields.size() < 2 || fields.size() > 3)
            throw validation_error(name + ":" + std::to_string(lineno) +
                                   ": expected 2 or 3 fields, got " +
                                   std::to_string(fields.size()));
        const double re = parse_double(fields[0], name, lineno);
        const double im = parse_double(fields[1], name, lineno);
        const int m = fields.size() == 3 && !fields[2].empty()
                          ? parse_int(fields[2], name, lineno) : 1;
        if (m < 1)
            throw validation_error(name + ":" + std::to_string(lineno) +
                                   ": multiplicity must be >= 1");
        pts.emplace_back(re, im);
        mults.push_back(m);
    }
    return MultiSet(std::move(pts), std::move(mults));
}

MultiSet read_pointset_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open point-set file: " + path);
    return read_pointset_csv(in, path);
}

void write_pointset_csv(std::ostream& out, const MultiSet& set)
{
    out << "re,im,mult\n";
    for (std::size_t i = 0; i < set.size(); ++i)
        out << fmt17(set.point(i).real()) << ',' << fmt17(set.point(i).imag())
            << ',' << set.mult(i) << '\n';
}

void write_pointset_file(const std::string& path, const MultiSet& set)
{
    std::ofstream out(path);
    if (!out) throw validation_error("cannot write point-set file: " + path);
    write_pointset_csv(out, set);
}

InterpolationData read_interp_csv(std::istream& in, const std::string& name)
{
    struct Acc { std::map<int, cplx> by_j; };
    std::vector<std::pair<cplx, Acc>> acc; // keeps first-seen order
    auto slot = [&](cplx z) -> Acc& {
        for (auto& [p, a] : acc)
            if (p == z) return a;
        acc.emplace_back(z, Acc{});
        return acc.back().second;
    };

    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_csv(line);
        if (!header_seen) {
            header_seen = true;
            if (!fields.empty() && fields[0] == "re") continue;
        }
        if (fields.size() != 5)
            throw validation_error(name + ":" + std::to_string(lineno) +
                                   ": expected 5 fields re,im,j,c_re,c_im");
        const double re = parse_double(fields[0], name, lineno);
        const double im = parse_double(fields[1], name, lineno);
        const int j = parse_int(fields[2], name, lineno);
        const double cre = parse_double(fields[3], name, lineno);
        const double cim = parse_double(fields[4], name, lineno);
        if (j < 0)
            throw validation_error(name + ":" + std::to_string(lineno) + ": j must be >= 0");
        auto& a = slot(cplx(re, im));
        if (a.by_j.count(j))
            throw validation_error(name + ":" + std::to_string(lineno) +
                                   ": duplicate (point, j) constraint");
        a.by_j[j] = cplx(cre, cim);
    }

    std::vector<PointData> pts;
    for (auto& [z, a] : acc) {
        PointData p;
        p.lambda = z;
        const int m = a.by_j.empty() ? 0 : a.by_j.rbegin()->first + 1;
        p.values.assign(static_cast<std::size_t>(m), cplx(0.0));
        for (int j = 0; j < m; ++j) {
            auto it = a.by_j.find(j);
            if (it == a.by_j.end())
                throw validation_error(name + ": point (" + std::to_string(z.real()) + "," +
                                       std::to_string(z.imag()) + ") is missing order " +
                                       std::to_string(j) + " (orders must run 0..m-1)");
            p.values[static_cast<std::size_t>(j)] = it->second;
        }
        pts.push_back(std::move(p));
    }
    return InterpolationData(std::move(pts));
}

InterpolationData read_interp_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open interpolation data file: " + path);
    return read_interp_csv(in, path);
}

void write_interp_csv(std::ostream& out, const InterpolationData& data)
{
    out << "re,im,j,c_re,c_im\n";
    for (const auto& p : data.points())
        for (std::size_t j = 0; j < p.values.size(); ++j)
            out << fmt17(p.lambda.real()) << ',' << fmt17(p.lambda.imag()) << ',' << j
                << ',' << fmt17(p.values[j].real()) << ',' << fmt17(p.values[j].imag()) << '\n';
}

} // namespace fock
