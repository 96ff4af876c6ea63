#include "qzak/io.hpp"

#include <cstdio>
#include <cstring>
#include <stdexcept>

#include "json.hpp"

namespace qzak {

std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    // Guard against locale variations in printf: normalise any ',' to '.'.
    for (char* p = buf; *p; ++p) {
        if (*p == ',') *p = '.';
    }
    return std::string(buf);
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : out_(path, std::ios::binary), columns_(header.size()) {
    if (!out_) {
        throw std::runtime_error("cannot open for writing: " + path);
    }
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out_ << ',';
        out_ << header[i];
    }
    out_ << '\n';
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_) {
        throw std::runtime_error("csv row width mismatch");
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ << ',';
        out_ << cells[i];
    }
    out_ << '\n';
}

void CsvWriter::row_values(const std::vector<double>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) cells.push_back(format_g17(v));
    row(cells);
}

void CsvWriter::close() {
    if (out_.is_open()) out_.close();
}

namespace {

void put_i64_le(std::ofstream& out, std::int64_t v) {
    unsigned char b[8];
    auto u = static_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((u >> (8 * i)) & 0xFF);
    out.write(reinterpret_cast<const char*>(b), 8);
}

void put_f64_le(std::ofstream& out, double v) {
    std::uint64_t u = 0;
    std::memcpy(&u, &v, 8);
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((u >> (8 * i)) & 0xFF);
    out.write(reinterpret_cast<const char*>(b), 8);
}

std::int64_t get_i64_le(std::ifstream& in) {
    unsigned char b[8];
    in.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t u = 0;
    for (int i = 0; i < 8; ++i) u |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return static_cast<std::int64_t>(u);
}

double get_f64_le(std::ifstream& in) {
    unsigned char b[8];
    in.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t u = 0;
    for (int i = 0; i < 8; ++i) u |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    double v = 0.0;
    std::memcpy(&v, &u, 8);
    return v;
}

void put_field(std::ofstream& out, const FourierField& f) {
    for (const auto& c : f.c) {
        put_f64_le(out, c.real());
        put_f64_le(out, c.imag());
    }
}

FourierField get_field(std::ifstream& in, std::size_t n) {
    FourierField f;
    f.c.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double re = get_f64_le(in);
        double im = get_f64_le(in);
        f.c[i] = {re, im};
    }
    return f;
}

}  // namespace

void write_checkpoint(const std::string& path, const SpectralGrid& g, double eps,
                      const PrimalState& state) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write("QZK1", 4);
    put_i64_le(out, static_cast<std::int64_t>(g.n));
    put_f64_le(out, g.length);
    put_f64_le(out, eps);
    put_f64_le(out, state.t);
    put_field(out, state.E);
    put_field(out, state.n);
    put_field(out, state.nt);
    if (!out) throw std::runtime_error("write failed: " + path);
}

Checkpoint read_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    char magic[4] = {0, 0, 0, 0};
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "QZK1", 4) != 0) {
        throw std::runtime_error("bad checkpoint magic: " + path);
    }
    Checkpoint cp;
    cp.size = get_i64_le(in);
    if (cp.size <= 0 || cp.size > (std::int64_t{1} << 30)) {
        throw std::runtime_error("bad checkpoint size field: " + path);
    }
    cp.length = get_f64_le(in);
    cp.eps = get_f64_le(in);
    cp.t = get_f64_le(in);
    auto n = static_cast<std::size_t>(cp.size);
    cp.E = get_field(in, n);
    cp.n = get_field(in, n);
    cp.nt = get_field(in, n);
    if (!in) throw std::runtime_error("truncated checkpoint: " + path);
    return cp;
}

void write_checkpoint_json(const std::string& path, const SpectralGrid& g, double eps,
                           const PrimalState& state) {
    nlohmann::json j;
    j["format"] = "QZK1";
    j["grid_n"] = g.n;
    j["length"] = g.length;
    j["eps"] = eps;
    j["t"] = state.t;
    auto dump = [](const FourierField& f) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : f.c) {
            arr.push_back({c.real(), c.imag()});
        }
        return arr;
    };
    j["E"] = dump(state.E);
    j["n"] = dump(state.n);
    j["nt"] = dump(state.nt);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << j.dump(2) << '\n';
}

}  // namespace qzak
