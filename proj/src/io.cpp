#include "uddpir/io.hpp"

#include <fstream>
#include <sstream>

namespace uddpir {

namespace {

std::vector<int> parse_ints(const std::string& line, int line_no) {
    std::istringstream ss(line);
    std::vector<int> vals;
    int v;
    while (ss >> v) vals.push_back(v);
    std::string rest;
    if (ss.clear(), ss >> rest)
        throw ParseError("line " + std::to_string(line_no) +
                         ": unexpected token '" + rest + "'");
    return vals;
}

std::string next_content_line(std::istream& in, int& line_no) {
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        size_t pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) return line;
    }
    throw ParseError("line " + std::to_string(line_no + 1) +
                     ": unexpected end of file");
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

GfMatrix read_matrix(std::istream& in) {
    int line_no = 0;
    std::vector<int> header = parse_ints(next_content_line(in, line_no), line_no);
    if (header.size() < 3)
        throw ParseError("line " + std::to_string(line_no) +
                         ": header needs 'q k n [modulus-digits]'");
    int q = header[0], k = header[1], n = header[2];
    if (q < 2 || k < 1 || n < 0)
        throw ParseError("line " + std::to_string(line_no) + ": bad header values");

    Field field = [&] {
        if (is_prime(q)) {
            if (header.size() != 3)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": prime q takes no modulus digits");
            return Field::create(q, 1);
        }
        Field probe = Field::of_order(q);  // determines p and m
        if (header.size() == 3) return probe;
        std::vector<int> modulus(header.begin() + 3, header.end());
        if (static_cast<int>(modulus.size()) != probe.m() + 1)
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(probe.m() + 1) + " modulus digits");
        return Field::create(probe.p(), probe.m(), modulus);
    }();

    std::vector<int> entries;
    entries.reserve(static_cast<size_t>(k) * n);
    for (int r = 0; r < k && n > 0; ++r) {
        std::vector<int> row = parse_ints(next_content_line(in, line_no), line_no);
        if (static_cast<int>(row.size()) != n)
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(n) + " entries, got " +
                             std::to_string(row.size()));
        for (int e : row) {
            if (e < 0 || e >= q)
                throw ParseError("line " + std::to_string(line_no) + ": entry " +
                                 std::to_string(e) + " outside [0," +
                                 std::to_string(q) + ")");
            entries.push_back(e);
        }
    }
    return GfMatrix(field, k, n, std::move(entries));
}

GfMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_matrix(in);
}

std::string write_matrix(const GfMatrix& g) {
    std::ostringstream os;
    os << g.field().q() << " " << g.rows() << " " << g.cols();
    if (g.field().m() > 1)
        for (int c : g.field().modulus()) os << " " << c;
    os << "\n";
    for (int r = 0; r < g.rows(); ++r) {
        for (int c = 0; c < g.cols(); ++c) {
            if (c) os << " ";
            os << g.at(r, c);
        }
        os << "\n";
    }
    return os.str();
}

void write_matrix_file(const GfMatrix& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << write_matrix(g);
}

}  // namespace uddpir
