#include "epsteinlab/field_io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace epsteinlab {
namespace {

void write_header(std::ostream& os, const GridChart& c) {
    os << std::setprecision(17);
    os << c.nx() << ',' << c.ny() << ',' << c.x0() << ',' << c.y0() << ',' << c.dx() << ',' << c.dy() << '\n';
}

std::vector<double> split_numbers(const std::string& line) {
    std::vector<double> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(cell, &used));
        } catch (const std::exception&) {
            throw IoError("malformed number '" + cell + "' in field file");
        }
    }
    return out;
}

ChartPtr read_header(std::istream& is, bool periodic) {
    std::string line;
    if (!std::getline(is, line)) throw IoError("empty field file");
    const auto h = split_numbers(line);
    if (h.size() != 6) throw IoError("field header needs 6 values");
    try {
        return std::make_shared<const GridChart>(static_cast<int>(h[0]), static_cast<int>(h[1]), h[2], h[3], h[4],
                                                 h[5], periodic, periodic);
    } catch (const ConfigInvalid& e) {
        throw IoError(std::string("invalid field header: ") + e.what());
    }
}

template <class Fn>
void read_records(std::istream& is, std::size_t n, std::size_t cols, Fn&& store) {
    std::string line;
    for (std::size_t k = 0; k < n; ++k) {
        if (!std::getline(is, line)) throw IoError("field file ends early");
        const auto v = split_numbers(line);
        if (v.size() != cols) throw IoError("wrong column count in field record");
        store(k, v);
    }
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open '" + path + "' for writing");
    os << std::setprecision(17);
    return os;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open '" + path + "'");
    return is;
}

}  // namespace

void write_field_csv(std::ostream& os, const ScalarField& f) {
    write_header(os, f.chart());
    for (std::size_t k = 0; k < f.size(); ++k) os << f[k] << '\n';
}

void write_field_csv(std::ostream& os, const SymTensor2Field& f) {
    write_header(os, f.chart());
    for (std::size_t k = 0; k < f.size(); ++k) os << f[k].xx << ',' << f[k].xy << ',' << f[k].yy << '\n';
}

void write_field_csv(const std::string& path, const ScalarField& f) {
    auto os = open_out(path);
    write_field_csv(os, f);
}

void write_field_csv(const std::string& path, const SymTensor2Field& f) {
    auto os = open_out(path);
    write_field_csv(os, f);
}

ScalarField read_scalar_csv(std::istream& is, bool periodic) {
    ScalarField f(read_header(is, periodic));
    read_records(is, f.size(), 1, [&](std::size_t k, const std::vector<double>& v) { f[k] = v[0]; });
    return f;
}

SymTensor2Field read_tensor_csv(std::istream& is, bool periodic) {
    SymTensor2Field f(read_header(is, periodic));
    read_records(is, f.size(), 3, [&](std::size_t k, const std::vector<double>& v) { f[k] = {v[0], v[1], v[2]}; });
    return f;
}

ScalarField read_scalar_csv(const std::string& path, bool periodic) {
    auto is = open_in(path);
    return read_scalar_csv(is, periodic);
}

SymTensor2Field read_tensor_csv(const std::string& path, bool periodic) {
    auto is = open_in(path);
    return read_tensor_csv(is, periodic);
}

}  // namespace epsteinlab
