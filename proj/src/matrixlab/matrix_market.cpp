#include "gave/matrixlab/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include "gave/error.hpp"

namespace gave {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
    return out;
}

}  // namespace

SparseMatrix read_matrix_market(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw Error(ErrorCode::ParseError, "empty Matrix Market stream");
    std::istringstream header(line);
    std::string banner, object, format, field, symmetry;
    header >> banner >> object >> format >> field >> symmetry;
    if (banner != "%%MatrixMarket" || lower(object) != "matrix" || lower(format) != "coordinate") {
        throw Error(ErrorCode::ParseError, "expected '%%MatrixMarket matrix coordinate' header");
    }
    field = lower(field);
    symmetry = lower(symmetry);
    if (field != "real" && field != "integer") throw Error(ErrorCode::ParseError, "unsupported field " + field);
    if (symmetry != "general" && symmetry != "symmetric") {
        throw Error(ErrorCode::ParseError, "unsupported symmetry " + symmetry);
    }

    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '%') break;
    }
    std::size_t rows = 0, cols = 0, count = 0;
    {
        std::istringstream size_line(line);
        if (!(size_line >> rows >> cols >> count)) throw Error(ErrorCode::ParseError, "bad size line");
    }

    std::vector<SparseMatrix::Triplet> t;
    t.reserve(symmetry == "symmetric" ? 2 * count : count);
    std::size_t read = 0;
    while (read < count && std::getline(in, line)) {
        if (line.empty() || line[0] == '%') continue;
        std::istringstream entry(line);
        std::size_t i = 0, j = 0;
        double v = 0.0;
        if (!(entry >> i >> j >> v) || i == 0 || j == 0 || i > rows || j > cols) {
            throw Error(ErrorCode::ParseError, "bad entry line: " + line);
        }
        t.push_back({i - 1, j - 1, v});
        if (symmetry == "symmetric" && i != j) t.push_back({j - 1, i - 1, v});
        ++read;
    }
    if (read != count) throw Error(ErrorCode::ParseError, "truncated entry list");
    return SparseMatrix::from_triplets(rows, cols, std::move(t));
}

SparseMatrix read_matrix_market(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_matrix_market(in);
}

void write_matrix_market(std::ostream& out, const SparseMatrix& m) {
    out << "%%MatrixMarket matrix coordinate real general\n";
    out << m.rows() << ' ' << m.cols() << ' ' << m.nnz() << '\n';
    out << std::setprecision(17);
    for (const auto& e : m.triplets()) out << e.row + 1 << ' ' << e.col + 1 << ' ' << e.value << '\n';
}

void write_matrix_market(const std::filesystem::path& path, const SparseMatrix& m) {
    auto out = open_out(path);
    write_matrix_market(out, m);
}

Vector read_vector(std::istream& in) {
    Vector v;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '%' || line[first] == '#') continue;
        std::istringstream value(line);
        double x = 0.0;
        if (!(value >> x)) throw Error(ErrorCode::ParseError, "bad vector entry: " + line);
        v.push_back(x);
    }
    return v;
}

Vector read_vector(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_vector(in);
}

void write_vector(std::ostream& out, std::span<const double> v) {
    out << std::setprecision(17);
    for (double x : v) out << x << '\n';
}

void write_vector(const std::filesystem::path& path, std::span<const double> v) {
    auto out = open_out(path);
    write_vector(out, v);
}

}  // namespace gave
